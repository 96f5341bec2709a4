#include "roofs/commands.hpp"

#include <iostream>

int main() {
  const auto rep = roofs::commands::verify_all();
  for (const auto& s : rep.sections) {
    std::cout << (s.pass() ? "PASS  " : "FAIL  ") << "criterion " << s.title << "\n";
    if (s.pass()) continue;
    if (s.error) std::cout << "        error: " << *s.error << "\n";
    for (const auto& c : s.checks)
      if (!c.pass) {
        std::cout << "        " << c.name << ": " << c.value.dump();
        if (c.expected) std::cout << " expected " << c.expected->dump();
        std::cout << "\n";
      }
  }
  std::cout << (rep.pass() ? "all criteria passed" : "some criteria failed") << "\n";
  return rep.pass() ? 0 : 1;
}
