#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace {

using Terms = std::map<int, long long>;

Terms mul(const Terms& a, const Terms& b) {
  Terms r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  return r;
}

}  // namespace

gordian::LaurentPoly bracket(const gordian::GaussCode& g) {
  const auto& ps = g.passes();
  const int m = static_cast<int>(ps.size());
  if (m == 0) return gordian::LaurentPoly::constant(1);
  if (m > 2 * 16) throw std::runtime_error("oracle is for small codes");
  const int n = m / 2;

  // Arc k runs from pass k to pass k+1. End point 2k is its start, 2k+1 its end.
  auto start = [&](int k) { return 2 * (((k % m) + m) % m); };
  auto end = [&](int k) { return 2 * (((k % m) + m) % m) + 1; };

  std::map<int, int> under_at, over_at;
  for (int i = 0; i < m; ++i) (ps[static_cast<std::size_t>(i)].strand == gordian::Strand::Under ? under_at : over_at)[ps[static_cast<std::size_t>(i)].id] = i;
  std::vector<std::array<int, 4>> ports;  // counterclockwise, slot 0 = incoming under
  for (auto it = under_at.rbegin(); it != under_at.rend(); ++it) {
    int u = it->second, o = over_at.at(it->first);
    if (ps[static_cast<std::size_t>(u)].sign > 0)
      ports.push_back({end(u - 1), start(o), start(u), end(o - 1)});
    else
      ports.push_back({end(u - 1), end(o - 1), start(u), start(o)});
  }

  Terms mu{{2, -1}, {-2, -1}};
  std::vector<Terms> mu_pow{{{0, 1}}};
  for (int k = 1; k <= m + 1; ++k) mu_pow.push_back(mul(mu_pow.back(), mu));

  Terms total;
  std::vector<int> partner(static_cast<std::size_t>(2 * m));
  std::vector<char> seen(static_cast<std::size_t>(2 * m));
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    int a = 0;
    for (int c = 0; c < n; ++c) {
      const auto& p = ports[static_cast<std::size_t>(c)];
      bool is_a = !((s >> c) & 1);
      a += is_a;
      auto link = [&](int x, int y) {
        partner[static_cast<std::size_t>(x)] = y;
        partner[static_cast<std::size_t>(y)] = x;
      };
      if (is_a) {
        link(p[0], p[1]);
        link(p[2], p[3]);
      } else {
        link(p[0], p[3]);
        link(p[1], p[2]);
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    int loops = 0;
    for (int e = 0; e < 2 * m; ++e) {
      if (seen[static_cast<std::size_t>(e)]) continue;
      ++loops;
      int x = e;
      while (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        int other = x ^ 1;  // the other end of the same arc
        seen[static_cast<std::size_t>(other)] = 1;
        x = partner[static_cast<std::size_t>(other)];
      }
    }
    const int b = n - a;
    for (const auto& [e, c] : mu_pow[static_cast<std::size_t>(loops - 1)]) total[e + a - b] += c;
  }
  std::vector<std::pair<int, gordian::Integer>> terms;
  for (const auto& [e, c] : total)
    if (c) terms.emplace_back(e, gordian::Integer(std::to_string(c)));
  return gordian::LaurentPoly::from_terms(terms);
}

int writhe(const gordian::GaussCode& g) {
  int w = 0;
  for (const auto& p : g.passes())
    if (p.strand == gordian::Strand::Over) w += p.sign;
  return w;
}

}  // namespace oracle
