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

#include "anisogauge/gtcheck.hpp"

#include <algorithm>
#include <array>

#include "anisogauge/error.hpp"

namespace anisogauge {

std::pair<ExtElement, ExtElement> eigenvalues_2x2(const FieldCtx& ctx, const Mat2& m) {
  const auto q = ctx.q();
  const Residue half = ctx.half();
  const Residue tr = m.trace();
  const Residue disc = mod_sub(mod_mul(tr, tr, q), mod_mul(4 % q, m.det(), q), q);
  // Every element of F_q is a square in F_{q^2}.
  const ExtElement s = *sqrt_ext(ctx.base(disc));
  ExtElement x = (ctx.base(tr) + s).scaled(half);
  ExtElement y = (ctx.base(tr) - s).scaled(half);
  if (y < x) std::swap(x, y);
  return {x, y};
}

GTVerdict gt_criterion(const FieldCtx& ctx, const SplitOrthMap& m) {
  if (ctx.q() == 2) throw Error(Errc::EvenCharacteristic, "criterion needs odd q");
  if (!m.beta.invertible()) throw Error(Errc::BetaSingular, "beta = " + m.beta.to_string());

  GTVerdict v;
  v.criterion_matrix = m.alpha + m.beta * m.delta * m.beta.inverse();
  std::tie(v.mu1, v.mu2) = eigenvalues_2x2(ctx, v.criterion_matrix);
  if (v.mu1.is_zero() || v.mu2.is_zero())
    throw Error(Errc::ZeroEigenvalue, "alpha + beta delta beta^-1 = " + v.criterion_matrix.to_string() + " is singular");
  v.ratio = v.mu1 / v.mu2;
  const ExtElement reversed = v.mu2 / v.mu1;
  if (!(reversed == v.ratio)) v.ratio_reversed = reversed;
  v.group_theoretical = frobenius(v.ratio) == v.ratio;
  v.witness = "mu1/mu2 = " + v.ratio.to_string() + (v.group_theoretical ? " is" : " is not") +
              " fixed by Frobenius";
  return v;
}

SplitOrthMap hyperbolic_control(const FieldCtx& ctx, Residue a) {
  const auto q = ctx.q();
  if (a >= q || a == 0 || a == 1) throw Error(Errc::BadParameter, "a must lie in F_q \\ {0, 1}");
  const Mat2 g{q, {a, 0, 0, mod_inv(a, q)}};
  return embed_alpha_g(g);
}

namespace {

// Coefficients constant term first.
std::vector<Residue> poly_mul(const std::vector<Residue>& f, const std::vector<Residue>& g, std::uint32_t q) {
  std::vector<Residue> out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = mod_add(out[i + j], mod_mul(f[i], g[j], q), q);
  return out;
}

std::vector<Residue> quartic(std::uint32_t q) {
  return {mod_reduce(-1, q), mod_reduce(-2, q), 0, mod_reduce(2, q), 1 % q};
}

}  // namespace

bool polynomial_expansion_check(std::uint32_t q) {
  if (!is_prime(q)) throw Error(Errc::NotPrime, std::to_string(q) + " is not prime");
  const std::vector<Residue> plus{1 % q, 1 % q}, minus{mod_reduce(-1, q), 1 % q};
  const auto cube = poly_mul(poly_mul(plus, plus, q), plus, q);
  return poly_mul(cube, minus, q) == quartic(q);
}

std::vector<ExtElement> quartic_root_multiset(const FieldCtx& ctx) {
  std::vector<ExtElement> coeffs;
  for (Residue r : quartic(ctx.q())) coeffs.push_back(ctx.base(r));

  // Horner evaluation; deflate returns the quotient when the remainder is 0.
  auto deflate = [&ctx](const std::vector<ExtElement>& f, const ExtElement& r) -> std::optional<std::vector<ExtElement>> {
    if (f.size() < 2) return std::nullopt;
    std::vector<ExtElement> quotient(f.size() - 1, ctx.zero());
    ExtElement acc = ctx.zero();
    for (std::size_t i = f.size(); i-- > 1;) {
      acc = acc * r + f[i];
      quotient[i - 1] = acc;
    }
    if (!(acc * r + f[0]).is_zero()) return std::nullopt;
    return quotient;
  };

  std::vector<ExtElement> roots;
  for (const auto& r : ctx.elements()) {
    std::vector<ExtElement> f = coeffs;
    while (auto next = deflate(f, r)) {
      roots.push_back(r);
      f = std::move(*next);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool polynomial_identity_check(std::uint32_t q) {
  if (!polynomial_expansion_check(q)) return false;
  if (q > 50) return true;
  const FieldCtx ctx = make_field(q);
  const auto roots = quartic_root_multiset(ctx);
  if (roots.size() != 4) return false;
  return std::all_of(roots.begin(), roots.end(),
                     [&](const ExtElement& r) { return r == ctx.one() || r == -ctx.one(); });
}

NonGtReport nongt_theorem_suite(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(p) || !is_prime(q) || p == 2 || q == 2 || p == q)
    throw Error(Errc::BadParameter, "p and q must be distinct odd primes");
  if ((q + 1) % p != 0)
    throw Error(Errc::ExistenceViolated, "p = " + std::to_string(p) + " does not divide q+1 = " + std::to_string(q + 1));

  NonGtReport rep;
  rep.p = p;
  rep.q = q;
  const FieldCtx ctx = make_field(q);
  const ExtElement c = pick_order_p(ctx, p);
  rep.c = c;
  const ExtElement one = ctx.one(), c_inv = c.inverse();
  const OrthMap g = rotation(c);
  const Mat2 gm = g.matrix();

  const auto [e1, e2] = eigenvalues_2x2(ctx, gm);
  const ExtElement lo = std::min(c, c_inv), hi = std::max(c, c_inv);
  rep.eigenvalues_are_c_and_inverse = e1 == lo && e2 == hi && frobenius(c) == c_inv && !c.in_base_field();

  const ExtElement lambda = (one + c) / (one + c_inv);
  rep.lambda_equals_c = lambda == c;
  rep.lambda_outside_base = !(frobenius(lambda) == lambda);

  const SplitOrthMap embedded = embed_alpha_g(g);
  rep.verdict = gt_criterion(ctx, embedded);
  rep.criterion_not_gt = !rep.verdict.group_theoretical;
  rep.criterion_matrix_is_id_plus_g = rep.verdict.criterion_matrix == Mat2::identity(q) + gm;

  // g -> alpha_g on the cyclic group <rho_c>.
  std::vector<Mat2> powers{Mat2::identity(q)};
  for (std::uint32_t k = 1; k < p; ++k) powers.push_back(powers.back() * gm);
  std::vector<SplitOrthMap> images;
  for (const auto& h : powers) images.push_back(embed_alpha_g(h));
  bool hom = true;
  for (std::uint32_t i = 0; i < p && hom; ++i)
    for (std::uint32_t j = 0; j < p && hom; ++j)
      hom = embed_alpha_g(powers[i] * powers[j]) == images[i].compose(images[j]);
  for (std::uint32_t i = 0; i < p && hom; ++i)
    for (std::uint32_t j = i + 1; j < p && hom; ++j) hom = !(images[i] == images[j]);
  rep.embedding_is_homomorphism = hom;

  const QuadSpace split = build_split(ctx);
  rep.embedding_orthogonal =
      std::all_of(images.begin(), images.end(), [&](const SplitOrthMap& m) { return is_orthogonal(split, m); });
  return rep;
}

bool existence_gate(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(p) || !is_prime(q) || p == 2 || q == 2 || p >= q)
    throw Error(Errc::BadParameter, "expected odd primes p < q");
  return (q + 1) % p == 0;
}

}  // namespace anisogauge
