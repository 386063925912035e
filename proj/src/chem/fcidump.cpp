// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/chem/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace hcbmeas::chem {
namespace {

constexpr double kConflictTolerance = 1e-10;
constexpr double kWriteThreshold = 1e-15;

int header_int(const std::string& header, const std::string& key,
               bool required) {
  const std::regex re(key + R"(\s*=\s*(-?\d+))", std::regex::icase);
  std::smatch m;
  if (!std::regex_search(header, m, re)) {
    if (required) throw FcidumpError("FCIDUMP header lacks " + key);
    return 0;
  }
  return std::stoi(m[1].str());
}

// Canonical (p >= q, r >= s, pq >= rs) key of a 0-based chemist label.
std::array<int, 4> canonical(int p, int q, int r, int s) {
  if (p < q) std::swap(p, q);
  if (r < s) std::swap(r, s);
  if (p < r || (p == r && q < s)) {
    std::swap(p, r);
    std::swap(q, s);
  }
  return {p, q, r, s};
}

}  // namespace

IntegralTensors parse_fcidump(std::string_view text) {
  const std::string all(text);
  // The namelist ends at "&END" or a lone "/".
  static const std::regex end_re(R"((&END|&end|^\s*/\s*$))",
                                 std::regex::multiline);
  std::smatch end_match;
  if (all.find("&FCI") == std::string::npos &&
      all.find("&fci") == std::string::npos)
    throw FcidumpError("missing &FCI header");
  if (!std::regex_search(all, end_match, end_re))
    throw FcidumpError("unterminated FCIDUMP header");
  const std::string header = all.substr(0, end_match.position(0));
  const std::string body =
      all.substr(end_match.position(0) + end_match.length(0));

  const int norb = header_int(header, "NORB", true);
  const int nelec = header_int(header, "NELEC", true);
  if (norb < 1) throw FcidumpError("NORB must be positive");

  IntegralTensors t(norb, "fcidump");
  t.n_elec = nelec;

  std::map<std::array<int, 4>, double> two;
  std::map<std::pair<int, int>, double> one;
  bool have_core = false;

  std::istringstream in(body);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char c) { return std::isspace(c); }))
      continue;
    std::istringstream fields(line);
    std::string value_text;
    int i, j, k, l;
    if (!(fields >> value_text >> i >> j >> k >> l))
      throw FcidumpError("malformed FCIDUMP record at body line " +
                         std::to_string(line_no) + ": " + line);
    std::replace(value_text.begin(), value_text.end(), 'D', 'E');
    std::replace(value_text.begin(), value_text.end(), 'd', 'e');
    const double value = std::stod(value_text);
    for (int idx : {i, j, k, l})
      if (idx < 0 || idx > norb)
        throw FcidumpError("orbital index out of range at body line " +
                           std::to_string(line_no));

    auto check_conflict = [&](double old_value) {
      if (std::abs(old_value - value) > kConflictTolerance)
        throw FcidumpError("conflicting duplicate record at body line " +
                           std::to_string(line_no));
    };

    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (have_core) check_conflict(t.e_nuc);
      t.e_nuc = value;
      have_core = true;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      const auto key = canonical(i - 1, j - 1, k - 1, l - 1);
      if (auto it = two.find(key); it != two.end()) check_conflict(it->second);
      two[key] = value;
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      const std::pair<int, int> key = std::minmax(i - 1, j - 1);
      if (auto it = one.find(key); it != one.end()) check_conflict(it->second);
      one[key] = value;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy, not needed
    } else {
      throw FcidumpError("unsupported index pattern at body line " +
                         std::to_string(line_no));
    }
  }

  for (const auto& [key, value] : one) {
    t.h(key.first, key.second) = value;
    t.h(key.second, key.first) = value;
  }
  for (const auto& [key, value] : two) {
    const auto [p, q, r, s] = key;
    for (auto [a, b, c, d] :
         {std::array{p, q, r, s}, std::array{q, p, r, s},
          std::array{p, q, s, r}, std::array{q, p, s, r},
          std::array{r, s, p, q}, std::array{s, r, p, q},
          std::array{r, s, q, p}, std::array{s, r, q, p}})
      t.g_at(a, c, b, d) = value;  // (ab|cd) = g_{a c b d}
  }
  return t;
}

IntegralTensors read_fcidump(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw FcidumpError("cannot open " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_fcidump(buffer.str());
}

std::string format_fcidump(const IntegralTensors& t) {
  const int N = t.n_orb;
  std::string out;
  char buf[128];
  std::snprintf(buf, sizeof buf, " &FCI NORB=%d,NELEC=%d,MS2=0,\n", N,
                t.n_elec);
  out += buf;
  out += "  ORBSYM=";
  for (int i = 0; i < N; ++i) out += "1,";
  out += "\n  ISYM=1,\n &END\n";
  auto record = [&](double v, int i, int j, int k, int l) {
    std::snprintf(buf, sizeof buf, "%24.16E %4d %4d %4d %4d\n", v, i, j, k, l);
    out += buf;
  };
  for (int p = 0; p < N; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p == r && q < s) continue;
          const double v = t.chem(p, q, r, s);
          if (std::abs(v) > kWriteThreshold) record(v, p + 1, q + 1, r + 1, s + 1);
        }
  for (int p = 0; p < N; ++p)
    for (int q = 0; q <= p; ++q)
      if (std::abs(t.h(p, q)) > kWriteThreshold) record(t.h(p, q), p + 1, q + 1, 0, 0);
  record(t.e_nuc, 0, 0, 0, 0);
  return out;
}

void write_fcidump(const IntegralTensors& t, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw FcidumpError("cannot write " + path);
  file << format_fcidump(t);
  if (!file) throw FcidumpError("write failed for " + path);
}

}  // namespace hcbmeas::chem
