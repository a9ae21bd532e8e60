#include "beauville/character.hpp"

namespace beauville {

std::string Character::to_string() const {
  return "[" + std::to_string(i()) + "," + std::to_string(j()) + "]";
}

std::string GroupElement::to_string() const {
  if (is_zero()) return "0";
  auto part = [](int coeff, const char* name) {
    return coeff == 1 ? std::string(name) : std::to_string(coeff) + name;
  };
  std::string out;
  if (a() != 0) out += part(a(), "e1");
  if (b() != 0) {
    if (!out.empty()) out += "+";
    out += part(b(), "e2");
  }
  return out;
}

}  // namespace beauville
