#include "triangle_words/twisted.hpp"

#include "triangle_words/error.hpp"

namespace triangle_words {

namespace {

void require_same_base(const TwistedAutomorphism& t, const ReducedWord& v) {
  if (v.base_ptr().get() != static_cast<const BaseGroup*>(t.base_ptr().get())) {
    fail(ErrorCode::mixed_base, "word and automorphism use different base groups");
  }
}

}  // namespace

TwistedAutomorphism::TwistedAutomorphism(std::shared_ptr<const FiniteGroup> base,
                                         std::vector<ElementId> phi, ElementId p)
    : base_(std::move(base)), phi_(std::move(phi)), p_(p) {
  if (!base_) fail(ErrorCode::invalid_automorphism, "missing base group");
  const auto& g = *base_;
  const std::size_t n = g.order();
  if (phi_.size() != n) {
    fail(ErrorCode::invalid_automorphism, "phi must list an image for each of the " +
                                              std::to_string(n) + " elements");
  }
  std::vector<bool> hit(n, false);
  for (const auto y : phi_) {
    if (y >= n || hit[y]) fail(ErrorCode::invalid_automorphism, "phi is not a bijection");
    hit[y] = true;
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (phi_[g.mul(x, y)] != g.mul(phi_[x], phi_[y])) {
        fail(ErrorCode::invalid_automorphism, "phi is not multiplicative");
      }
    }
  }
  if (!g.contains(p_)) fail(ErrorCode::invalid_letter, "p is not in the base group");
}

std::size_t TwistedAutomorphism::phi_order() const {
  std::vector<ElementId> power = phi_;
  std::size_t d = 1;
  auto is_identity = [](const std::vector<ElementId>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] != i) return false;
    return true;
  };
  while (!is_identity(power)) {
    for (auto& x : power) x = phi_[x];
    ++d;
  }
  return d;
}

ReducedWord apply_twisted(const TwistedAutomorphism& t, const ReducedWord& v) {
  require_same_base(t, v);
  const FiniteGroup& g = t.base();
  const auto& vb = v.base_letters();
  const auto& signs = v.signs();
  const std::size_t s = signs.size();
  // p_e is p for e = +1 and the identity for e = -1.
  auto p_of = [&](int e) { return e == 1 ? t.p() : BaseGroup::kIdentity; };

  std::vector<ElementId> out(s + 1);
  for (std::size_t i = 0; i <= s; ++i) {
    ElementId x = t.phi(vb[i]);
    if (i > 0) x = g.mul(g.inv(p_of(-signs[i - 1])), x);
    if (i < s) x = g.mul(x, p_of(signs[i]));
    out[i] = x;
  }
  return ReducedWord(v.base_ptr(), std::move(out), signs);
}

ReducedWord apply_twisted_by_substitution(const TwistedAutomorphism& t, const ReducedWord& v) {
  require_same_base(t, v);
  const FiniteGroup& g = t.base();
  std::vector<Letter> letters;
  for (const auto& letter : v.letters()) {
    if (const auto* x = std::get_if<BaseLetter>(&letter)) {
      letters.emplace_back(BaseLetter{t.phi(x->id)});
    } else if (std::get<BLetter>(letter).exponent == 1) {
      letters.emplace_back(BaseLetter{t.p()});
      letters.emplace_back(BLetter{1});
    } else {
      letters.emplace_back(BLetter{-1});
      letters.emplace_back(BaseLetter{g.inv(t.p())});
    }
  }
  return normalize(letters, v.base_ptr());
}

bool twisted_order_check(const TwistedAutomorphism& t, Integer d) {
  if (d < 1) fail(ErrorCode::invalid_order, "d must be at least 1");
  const FiniteGroup& g = t.base();
  if (static_cast<Integer>(d) % static_cast<Integer>(t.phi_order()) != 0) {
    fail(ErrorCode::invalid_order, "phi^" + std::to_string(d) + " is not the identity");
  }

  const ReducedWord b(t.base_ptr(), {BaseGroup::kIdentity, BaseGroup::kIdentity}, {1});
  ReducedWord image = b;
  for (Integer i = 0; i < d; ++i) image = apply_twisted(t, image);
  const bool by_words = image == b;

  // psi^d(b) = phi^{d-1}(p) ... phi(p) p b.
  ElementId product = BaseGroup::kIdentity;
  ElementId term = t.p();
  for (Integer i = 0; i < d; ++i) {
    product = g.mul(term, product);
    term = t.phi(term);
  }
  const bool by_product = product == BaseGroup::kIdentity;

  if (by_words != by_product) {
    fail(ErrorCode::internal_inconsistency, "psi^d(b) disagrees with the product criterion");
  }
  return by_words;
}

std::optional<BElimination> eliminate_b(const TwistedAutomorphism& t, ElementId q) {
  const FiniteGroup& g = t.base();
  if (!g.contains(q)) fail(ErrorCode::invalid_letter, "q is not in the base group");
  const std::size_t n = g.order();

  // Least y for each conjugate y q y^-1.
  constexpr auto kNone = static_cast<ElementId>(-1);
  std::vector<ElementId> least_y(n, kNone);
  for (ElementId y = 0; y < n; ++y) {
    auto& slot = least_y[g.conjugate(y, q)];
    if (slot == kNone) slot = y;
  }

  const ElementId p = t.p();
  const ElementId p_inv = g.inv(p);
  for (int c = 1; c <= 4; ++c) {
    const ElementId left = (c == 3 || c == 4) ? p_inv : BaseGroup::kIdentity;
    const ElementId middle = (c == 2 || c == 4) ? p : BaseGroup::kIdentity;
    for (ElementId x = 0; x < n; ++x) {
      const auto lhs = g.mul(g.mul(left, g.mul(t.phi(x), middle)), g.inv(x));
      if (least_y[lhs] != kNone) return BElimination{c, x, least_y[lhs]};
    }
  }
  return std::nullopt;
}

VWPair construct_vw(std::shared_ptr<const BaseGroup> base, int case_index, ElementId x,
                    ElementId y) {
  const Letter bx{BaseLetter{x}};
  const Letter by{BaseLetter{y}};
  const Letter b{BLetter{1}};
  const Letter b_inv{BLetter{-1}};
  switch (case_index) {
    case 1: return {normalize({bx}, base), normalize({by}, base)};
    case 2: return {normalize({bx, b}, base), normalize({by}, base)};
    case 3: return {normalize({b_inv, bx}, base), normalize({b_inv, by}, base)};
    case 4: return {normalize({b_inv, bx, b}, base), normalize({b_inv, by}, base)};
    default:
      fail(ErrorCode::invalid_case, "case must be 1, 2, 3 or 4, got " + std::to_string(case_index));
  }
}

bool verify_vw(const TwistedAutomorphism& t, ElementId q, const VWPair& pair) {
  const auto lhs = multiply(apply_twisted(t, pair.v), invert(pair.v)).word;
  const auto wq = multiply(pair.w, ReducedWord::element(pair.w.base_ptr(), q)).word;
  const auto rhs = multiply(wq, invert(pair.w)).word;
  return lhs == rhs;
}

}  // namespace triangle_words
