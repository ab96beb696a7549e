#include "theta/simpletype.hpp"

namespace theta {

bool is_valid_simple_type(const SimpleType& t) {
  switch (t.family) {
    case 'A': return t.rank >= 1;
    case 'B': return t.rank >= 2;
    case 'C': return t.rank >= 2;
    case 'D': return t.rank >= 4;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
  }
}

void check_simple_type(const SimpleType& t) {
  if (!is_valid_simple_type(t))
    throw std::invalid_argument("invalid simple type " + std::string(1, t.family) +
                                std::to_string(t.rank));
}

int dim_of(const SimpleType& t) {
  const int l = t.rank;
  switch (t.family) {
    case 'A': return l * (l + 2);
    case 'B':
    case 'C': return l * (2 * l + 1);
    case 'D': return l * (2 * l - 1);
    case 'E': return l == 6 ? 78 : (l == 7 ? 133 : 248);
    case 'F': return 52;
    case 'G': return 14;
  }
  throw std::invalid_argument("bad family");
}

int positive_root_count(const SimpleType& t) { return (dim_of(t) - t.rank) / 2; }

std::string to_string(const SimpleType& t) {
  return std::string(1, t.family) + std::to_string(t.rank);
}

SimpleType parse_simple_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("cannot parse simple type: '" + s + "'");
  SimpleType t;
  t.family = s[0];
  for (size_t i = 1; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("cannot parse simple type: '" + s + "'");
  t.rank = std::stoi(s.substr(1));
  check_simple_type(t);
  return t;
}

}  // namespace theta
