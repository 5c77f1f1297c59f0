#include "triangle_words/words.hpp"

#include <charconv>
#include <deque>
#include <sstream>

#include "triangle_words/error.hpp"

namespace triangle_words {

namespace {

void check_letter(const BaseGroup& base, ElementId x) {
  if (!base.contains(x)) {
    fail(ErrorCode::invalid_letter, "base letter " + std::to_string(x) + " is not in the group");
  }
}

void check_sign(int exponent) {
  if (exponent != 1 && exponent != -1) {
    fail(ErrorCode::invalid_letter, "b-letter exponent must be +1 or -1, got " +
                                        std::to_string(exponent));
  }
}

template <typename Name>
std::string render(const ReducedWord& word, Name name) {
  std::string out = name(word.base_letters()[0]);
  for (std::size_t i = 0; i < word.length(); ++i) {
    out += word.signs()[i] == 1 ? " b " : " b- ";
    out += name(word.base_letters()[i + 1]);
  }
  return out;
}

}  // namespace

std::size_t first_cancellable(const std::vector<ElementId>& base_letters,
                              const std::vector<int>& signs) {
  for (std::size_t i = 1; i < signs.size(); ++i) {
    if (base_letters[i] == BaseGroup::kIdentity && signs[i - 1] == -signs[i]) return i;
  }
  return 0;
}

ReducedWord::ReducedWord(std::shared_ptr<const BaseGroup> base, std::vector<ElementId> base_letters,
                         std::vector<int> signs)
    : base_(std::move(base)), base_letters_(std::move(base_letters)), signs_(std::move(signs)) {
  if (!base_) fail(ErrorCode::invalid_word, "word has no base group");
  if (base_letters_.size() != signs_.size() + 1) {
    fail(ErrorCode::invalid_word, "a word of length s needs s + 1 base letters");
  }
  for (const auto x : base_letters_) check_letter(*base_, x);
  for (const auto e : signs_) check_sign(e);
  if (const auto i = first_cancellable(base_letters_, signs_); i != 0) {
    fail(ErrorCode::invalid_word, "identity between b^e and b^-e at base position " +
                                      std::to_string(i));
  }
}

ReducedWord ReducedWord::identity(std::shared_ptr<const BaseGroup> base) {
  return ReducedWord(std::move(base), {BaseGroup::kIdentity}, {});
}

ReducedWord ReducedWord::element(std::shared_ptr<const BaseGroup> base, ElementId x) {
  return ReducedWord(std::move(base), {x}, {});
}

std::vector<Letter> ReducedWord::letters() const {
  std::vector<Letter> out;
  out.reserve(base_letters_.size() + signs_.size());
  out.emplace_back(BaseLetter{base_letters_[0]});
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    out.emplace_back(BLetter{signs_[i]});
    out.emplace_back(BaseLetter{base_letters_[i + 1]});
  }
  return out;
}

bool operator==(const ReducedWord& lhs, const ReducedWord& rhs) noexcept {
  return lhs.base_ == rhs.base_ && lhs.base_letters_ == rhs.base_letters_ &&
         lhs.signs_ == rhs.signs_;
}

ReducedWord normalize(const std::vector<Letter>& letters, std::shared_ptr<const BaseGroup> base) {
  if (!base) fail(ErrorCode::invalid_word, "word has no base group");
  std::deque<ElementId> bases{BaseGroup::kIdentity};
  std::deque<int> signs;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (const auto* g = std::get_if<BaseLetter>(&*it)) {
      check_letter(*base, g->id);
      bases.front() = base->multiply(g->id, bases.front());
      continue;
    }
    const int e = std::get<BLetter>(*it).exponent;
    check_sign(e);
    if (!signs.empty() && bases.front() == BaseGroup::kIdentity && signs.front() == -e) {
      bases.pop_front();
      signs.pop_front();
    } else {
      bases.push_front(BaseGroup::kIdentity);
      signs.push_front(e);
    }
  }
  return ReducedWord(std::move(base), {bases.begin(), bases.end()}, {signs.begin(), signs.end()});
}

WordProduct multiply(const ReducedWord& u, const ReducedWord& v) {
  if (u.base_ptr() != v.base_ptr()) {
    fail(ErrorCode::mixed_base, "cannot multiply words over different base groups");
  }
  const BaseGroup& base = u.base();
  const auto& ub = u.base_letters();
  const auto& us = u.signs();
  const auto& vb = v.base_letters();
  const auto& vs = v.signs();

  // Cancel across the junction: after n steps the junction joins u_{2(s-n)}
  // and v_{2n}.
  std::size_t n = 0;
  ElementId junction = base.multiply(ub[us.size()], vb[0]);
  while (n < us.size() && n < vs.size() && junction == BaseGroup::kIdentity &&
         us[us.size() - 1 - n] == -vs[n]) {
    ++n;
    junction = base.multiply(ub[us.size() - n], vb[n]);
  }

  std::vector<ElementId> bases(ub.begin(), ub.begin() + static_cast<std::ptrdiff_t>(us.size() - n));
  bases.push_back(junction);
  bases.insert(bases.end(), vb.begin() + static_cast<std::ptrdiff_t>(n + 1), vb.end());
  std::vector<int> signs(us.begin(), us.end() - static_cast<std::ptrdiff_t>(n));
  signs.insert(signs.end(), vs.begin() + static_cast<std::ptrdiff_t>(n), vs.end());

  // Reduced inputs can only fail at the junction, and the loop above cleared it.
  if (first_cancellable(bases, signs) != 0) {
    fail(ErrorCode::internal_inconsistency, "concatenation left a cancellable pair away from "
                                            "the junction");
  }
  return {ReducedWord(u.base_ptr(), std::move(bases), std::move(signs)), n};
}

ReducedWord invert(const ReducedWord& u) {
  const BaseGroup& base = u.base();
  std::vector<ElementId> bases(u.base_letters().rbegin(), u.base_letters().rend());
  for (auto& x : bases) x = base.inverse(x);
  std::vector<int> signs(u.signs().rbegin(), u.signs().rend());
  for (auto& e : signs) e = -e;
  return ReducedWord(u.base_ptr(), std::move(bases), std::move(signs));
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "b") {
      out.emplace_back(BLetter{1});
    } else if (token == "b-") {
      out.emplace_back(BLetter{-1});
    } else if (token.rfind("g:", 0) == 0 && token.size() > 2) {
      ElementId id = 0;
      const char* first = token.data() + 2;
      const char* last = token.data() + token.size();
      const auto [end, ec] = std::from_chars(first, last, id);
      if (ec != std::errc() || end != last) {
        fail(ErrorCode::parse_error, "bad base-letter token '" + token + "'");
      }
      out.emplace_back(BaseLetter{id});
    } else {
      fail(ErrorCode::parse_error, "unknown token '" + token + "'; expected g:<id>, b or b-");
    }
  }
  return out;
}

std::string format_word(const ReducedWord& word) {
  return render(word, [](ElementId x) { return "g:" + std::to_string(x); });
}

std::string describe_word(const ReducedWord& word) {
  return render(word, [&word](ElementId x) { return word.base().element_name(x); });
}

}  // namespace triangle_words
