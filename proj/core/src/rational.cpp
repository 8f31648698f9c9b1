#include "q2mlo/rational.hpp"

#include <stdexcept>

namespace q2mlo {

std::int64_t floor_rat(const Rat& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil_rat(const Rat& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  auto parse_int = [](const std::string& s) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t pos = 0;
    std::int64_t v;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer in rational literal: " + s);
    }
    if (pos != s.size()) throw std::invalid_argument("trailing junk in rational literal: " + s);
    return v;
  };
  if (slash == std::string::npos) return Rat(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  return Rat(num, den);
}

std::string rat_to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::size_t hash_rat(const Rat& r) {
  std::size_t h1 = std::hash<std::int64_t>{}(r.numerator());
  std::size_t h2 = std::hash<std::int64_t>{}(r.denominator());
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

}  // namespace q2mlo
