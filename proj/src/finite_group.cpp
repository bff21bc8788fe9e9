/* Copyright 2026 The anisogauge Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "anisogauge/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "anisogauge/error.hpp"

namespace anisogauge {

FiniteGroup::FiniteGroup(std::uint32_t order, std::vector<std::uint32_t> table, bool check_associativity)
    : n_(order), table_(std::move(table)) {
  if (n_ == 0) throw Error(Errc::BadParameter, "empty group");
  if (table_.size() != std::size_t{n_} * n_) throw Error(Errc::BadParameter, "table has the wrong size");

  std::vector<char> seen(n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t b = 0; b < n_; ++b) {
      auto x = mul(a, b);
      if (x >= n_ || seen[x]) throw Error(Errc::BadParameter, "row " + std::to_string(a) + " is not a permutation");
      seen[x] = 1;
    }
  }
  for (std::uint32_t b = 0; b < n_; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t a = 0; a < n_; ++a) {
      auto x = mul(a, b);
      if (seen[x]) throw Error(Errc::BadParameter, "column " + std::to_string(b) + " is not a permutation");
      seen[x] = 1;
    }
  }

  bool found = false;
  for (std::uint32_t e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      e_ = e;
      found = true;
    }
  }
  if (!found) throw Error(Errc::BadParameter, "no identity element");

  if (check_associativity) {
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b) {
        const auto ab = mul(a, b);
        for (std::uint32_t c = 0; c < n_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) throw Error(Errc::BadParameter, "table is not associative");
      }
  }

  inv_.resize(n_);
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b)
      if (mul(a, b) == e_) inv_[a] = b;
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const FiniteGroup& g) {
  const auto n = g.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<std::uint32_t> cls;
    for (std::uint32_t h = 0; h < n; ++h) {
      auto y = g.mul(g.mul(h, x), g.inv(h));
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::size_t class_count_within(const FiniteGroup& g, const std::vector<std::uint32_t>& members) {
  std::vector<char> done(g.order(), 0);
  std::size_t count = 0;
  for (auto x : members) {
    if (done[x]) continue;
    ++count;
    for (auto h : members) done[g.mul(g.mul(h, x), g.inv(h))] = 1;
  }
  return count;
}

std::vector<std::uint32_t> centralizer(const FiniteGroup& g, std::uint32_t x) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t h = 0; h < g.order(); ++h)
    if (g.commute(h, x)) out.push_back(h);
  return out;
}

std::size_t commutator_subgroup_order(const FiniteGroup& g) {
  const auto n = g.order();
  std::vector<char> in(n, 0);
  std::vector<std::uint32_t> members;
  auto insert = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  insert(g.identity());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  // Close under multiplication; a finite subset closed under products is a subgroup.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      insert(g.mul(members[i], members[j]));
      insert(g.mul(members[j], members[i]));
    }
  return members.size();
}

std::uint64_t drinfeld_double_rank(const FiniteGroup& g, std::uint32_t bound) {
  if (g.order() > bound)
    throw Error(Errc::BoundExceeded, "|G| = " + std::to_string(g.order()) + " exceeds " + std::to_string(bound));
  std::uint64_t rank = 0;
  for (const auto& cls : conjugacy_classes(g)) rank += class_count_within(g, centralizer(g, cls.front()));
  return rank;
}

FiniteGroup cyclic_group(std::uint32_t n) {
  std::vector<std::uint32_t> t(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[std::size_t{a} * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(t));
}

FiniteGroup symmetric_group(std::uint32_t n) {
  if (n == 0 || n > 6) throw Error(Errc::BadParameter, "symmetric_group supports 1 <= n <= 6");
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const auto m = static_cast<std::uint32_t>(perms.size());
  std::vector<std::uint32_t> t(std::size_t{m} * m);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b) {
      std::vector<std::uint32_t> c(n);
      for (std::uint32_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];  // a after b
      t[std::size_t{a} * m + b] =
          static_cast<std::uint32_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(m, std::move(t));
}

FiniteGroup metacyclic_group(std::uint32_t m, std::uint32_t k, std::uint32_t r) {
  std::uint64_t rk = 1;
  for (std::uint32_t i = 0; i < k; ++i) rk = rk * r % m;
  if (rk != 1 % m) throw Error(Errc::BadParameter, "r^k != 1 mod m");
  std::vector<std::uint64_t> rpow(k, 1);
  for (std::uint32_t i = 1; i < k; ++i) rpow[i] = rpow[i - 1] * r % m;

  const std::uint32_t n = m * k;
  std::vector<std::uint32_t> t(std::size_t{n} * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t a = x % m, b = x / m, a2 = y % m, b2 = y / m;
      // (a, b)(a', b') = (a + r^b a', b + b')
      const auto na = static_cast<std::uint32_t>((a + rpow[b] * a2) % m);
      const auto nb = (b + b2) % k;
      t[std::size_t{x} * n + y] = nb * m + na;
    }
  return FiniteGroup(n, std::move(t));
}

FiniteGroup parse_group_table(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::int64_t n = 0;
  if (!(is >> n) || n <= 0 || n > 100000) throw Error(Errc::ParseError, "bad group order");
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n * n));
  for (auto& x : t) {
    std::int64_t v;
    if (!(is >> v)) throw Error(Errc::ParseError, "truncated multiplication table");
    if (v < 0 || v >= n) throw Error(Errc::ParseError, "entry out of range: " + std::to_string(v));
    x = static_cast<std::uint32_t>(v);
  }
  std::string extra;
  if (is >> extra) throw Error(Errc::ParseError, "trailing data after the table");
  return FiniteGroup(static_cast<std::uint32_t>(n), std::move(t));
}

}  // namespace anisogauge
