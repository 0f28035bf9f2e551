#include "resmirror/insertion.hpp"

#include "resmirror/errors.hpp"

#include <cctype>

namespace resmirror {

Insertion parse_insertion(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
  if (s.empty()) throw InvalidInsertion("empty insertion label");
  if (s == "1") return {};
  bool digits = true;
  for (char c : s) digits = digits && std::isdigit(static_cast<unsigned char>(c));
  if (digits) {
    if (s.size() > 3) throw InvalidInsertion("insertion exponent too large: " + text);
    return {std::stoi(s), 0};
  }
  Insertion ins;
  bool seen_z = false, seen_w = false;
  std::size_t i = 0;
  while (i < s.size()) {
    char v = s[i++];
    if (v == '^' || v == '*') continue;
    if (v != 'z' && v != 'w' && v != 'h') throw InvalidInsertion("bad insertion label: " + text);
    if (i < s.size() && s[i] == '^') ++i;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j - i > 3) throw InvalidInsertion("insertion exponent too large: " + text);
    int e = j > i ? std::stoi(s.substr(i, j - i)) : 1;
    i = j;
    if (v == 'w') {
      if (seen_w) throw InvalidInsertion("repeated variable in " + text);
      seen_w = true;
      ins.t = e;
    } else {
      if (seen_z) throw InvalidInsertion("repeated variable in " + text);
      seen_z = true;
      ins.s = e;
    }
  }
  return ins;
}

std::string label(const Insertion& ins, bool hyperplane) {
  if (ins.s == 0 && ins.t == 0) return "1";
  std::string out;
  auto put = [&](char v, int e) {
    if (e == 0) return;
    out += v;
    if (e > 1) out += std::to_string(e);
  };
  put(hyperplane ? 'h' : 'z', ins.s);
  put('w', ins.t);
  return out;
}

}  // namespace resmirror
