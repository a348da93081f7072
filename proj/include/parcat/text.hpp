#ifndef PARCAT_TEXT_HPP
#define PARCAT_TEXT_HPP

#include <optional>
#include <string>
#include <vector>

#include "parcat/maps.hpp"
#include "parcat/partition.hpp"
#include "parcat/poly.hpp"
#include "parcat/rtuple.hpp"
#include "parcat/tableau.hpp"

#include "json.hpp"

namespace parcat {

// Tuple text form: entries comma-separated, semicolons at the dividers,
// e.g. "2,4,6;1,5,7,8,9;3".  Parentheses and whitespace are tolerated on
// input.
std::string to_text(const RTuple& t);
std::string to_text(const RPermutation& p);
// Classical permutations print with no dividers.
std::string to_text_classical(const RPermutation& p);

// Parses a tuple, inferring the divider set from the semicolons.  Explicit
// n or R, when given, must agree with the string.
RTuple parse_rtuple(const std::string& s, std::optional<int> n = std::nullopt,
                    const std::optional<std::vector<int>>& relements = std::nullopt);
RPermutation parse_rpermutation(const std::string& s, std::optional<int> n = std::nullopt,
                                const std::optional<std::vector<int>>& relements = std::nullopt);
// A bare comma-separated permutation with no dividers.
RPermutation parse_classical_permutation(const std::string& s);

// Critical list: carrels joined by ';', pairs "index:entry" joined by ','
// in increasing index order.
std::string to_text(const CriticalList& c);

std::string to_text(const Partition& shape);
Partition parse_partition(const std::string& s);

std::vector<int> parse_int_list(const std::string& s);

// Tableau text: rows of aligned integers.
std::string to_text(const Tableau& t);
// Tableau one-liner: columns joined by '|', values by ','.
std::string to_compact(const Tableau& t);
nlohmann::json to_json(const Tableau& t);
// Accepts the JSON schema or the compact column form.  The shape argument
// must match when provided.
Tableau parse_tableau(const std::string& s, const std::optional<Partition>& shape = std::nullopt);

// Polynomial text: terms in descending lexicographic exponent order,
// joined by " + "; unit coefficients and unit exponents are suppressed.
std::string to_text(const SparsePoly& p);
nlohmann::json to_json(const SparsePoly& p);

}  // namespace parcat

#endif
