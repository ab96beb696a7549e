#ifndef THETA_SIMPLETYPE_HPP
#define THETA_SIMPLETYPE_HPP

#include <stdexcept>
#include <string>

namespace theta {

/// A simple Lie algebra type: family letter plus rank.
/// Rank bounds: A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2.
struct SimpleType {
  char family = 'A';
  int rank = 1;

  bool operator==(const SimpleType&) const = default;
};

/// Throws std::invalid_argument if the (family, rank) pair is not allowed.
void check_simple_type(const SimpleType& t);

bool is_valid_simple_type(const SimpleType& t);

/// Dimension of the simple Lie algebra of this type.
int dim_of(const SimpleType& t);

/// Number of positive roots.
int positive_root_count(const SimpleType& t);

/// "A5", "E7", ...
std::string to_string(const SimpleType& t);

/// Parses "A5", "D4", ... Throws on malformed input.
SimpleType parse_simple_type(const std::string& s);

}  // namespace theta

#endif
