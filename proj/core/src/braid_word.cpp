#include "skein/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>

#include "skein/error.hpp"

namespace skein {

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::vector<Letter> run() {
    std::vector<Letter> out;
    skip_ws();
    while (pos_ < s_.size()) {
      out.push_back(term());
      skip_ws();
    }
    return out;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  long number(const char* what) {
    std::size_t start = pos_;
    if (!digit()) throw ParseError(pos_, std::string("expected ") + what);
    long v = 0;
    while (digit()) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > INT_MAX) throw ParseError(start, "number too large");
      ++pos_;
    }
    return v;
  }

  Letter term() {
    std::size_t start = pos_;
    Letter l;
    char c = s_[pos_];
    if (c == 't') {
      ++pos_;
      if (digit()) {
        long i = number("loop index");
        if (i < 1) throw ParseError(start + 1, "loop index must be at least 1");
        l.index = static_cast<int>(i);
        l.kind = LetterKind::TLoop;
        if (pos_ < s_.size() && s_[pos_] == '\'') {
          l.kind = LetterKind::TLoopPrime;
          ++pos_;
        }
      } else {
        l.kind = LetterKind::T;
        l.index = 0;
      }
    } else if (c == 's') {
      ++pos_;
      long i = number("generator index after 's'");
      if (i < 1) throw ParseError(start + 1, "generator index must be at least 1");
      l.kind = LetterKind::Sigma;
      l.index = static_cast<int>(i);
    } else {
      throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      std::size_t epos = pos_;
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        neg = s_[pos_] == '-';
        ++pos_;
      }
      long e = number("exponent");
      if (e == 0) throw ParseError(epos, "zero exponent");
      l.exponent = static_cast<int>(neg ? -e : e);
    }
    if (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
        s_[pos_] != 't' && s_[pos_] != 's')
      throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
    return l;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Letter sigma(int i, int e) { return {LetterKind::Sigma, i, e}; }
Letter tee(int e) { return {LetterKind::T, 0, e}; }

}  // namespace

int strands_needed(const Letter& l) {
  return l.kind == LetterKind::T ? 1 : l.index + 1;
}

MixedBraidWord parse_word(std::string_view text, std::optional<int> strands) {
  MixedBraidWord wd;
  wd.letters = Parser(text).run();
  int need = 1;
  for (auto& l : wd.letters) need = std::max(need, strands_needed(l));
  if (strands) {
    if (*strands < 1) throw InputError("strand count must be at least 1");
    if (need > *strands)
      throw InputError("word needs " + std::to_string(need) + " strands but " +
                       std::to_string(*strands) + " were declared");
    wd.n = *strands;
  } else {
    wd.n = need;
  }
  return wd;
}

std::string render(const Letter& l) {
  std::string s;
  switch (l.kind) {
    case LetterKind::T: s = "t"; break;
    case LetterKind::Sigma: s = "s" + std::to_string(l.index); break;
    case LetterKind::TLoop: s = "t" + std::to_string(l.index); break;
    case LetterKind::TLoopPrime: s = "t" + std::to_string(l.index) + "'"; break;
  }
  if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
  return s;
}

std::string render(const MixedBraidWord& wd) {
  std::string s;
  for (auto& l : wd.letters) {
    if (!s.empty()) s += ' ';
    s += render(l);
  }
  return s;
}

MixedBraidWord concat(const MixedBraidWord& a, const MixedBraidWord& b) {
  MixedBraidWord r{std::max(a.n, b.n), a.letters};
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

MixedBraidWord inverse(const MixedBraidWord& wd) {
  MixedBraidWord r{wd.n, {}};
  for (auto it = wd.letters.rbegin(); it != wd.letters.rend(); ++it) {
    Letter l = *it;
    l.exponent = -l.exponent;
    r.letters.push_back(l);
  }
  return r;
}

MixedBraidWord free_reduce(const MixedBraidWord& wd) {
  MixedBraidWord r{wd.n, {}};
  for (auto& l : wd.letters) {
    if (!r.letters.empty() && r.letters.back().kind == l.kind && r.letters.back().index == l.index) {
      r.letters.back().exponent += l.exponent;
      if (r.letters.back().exponent == 0) r.letters.pop_back();
    } else if (l.exponent != 0) {
      r.letters.push_back(l);
    }
  }
  return r;
}

MixedBraidWord expand_loops(const MixedBraidWord& wd) {
  MixedBraidWord r{wd.n, {}};
  for (auto& l : wd.letters) {
    if (l.kind == LetterKind::T || l.kind == LetterKind::Sigma) {
      r.letters.push_back(l);
      continue;
    }
    int i = l.index, k = std::abs(l.exponent), s = l.exponent > 0 ? 1 : -1;
    std::vector<Letter> once;
    if (l.kind == LetterKind::TLoop) {
      // t_i = s_i..s_1 t s_1..s_i; its inverse reverses with negated exponents
      for (int j = i; j >= 1; --j) once.push_back(sigma(j, s));
      once.push_back(tee(s));
      for (int j = 1; j <= i; ++j) once.push_back(sigma(j, s));
    } else {
      for (int j = i; j >= 1; --j) once.push_back(sigma(j, 1));
      once.push_back(tee(s));
      for (int j = 1; j <= i; ++j) once.push_back(sigma(j, -1));
    }
    for (int rep = 0; rep < k; ++rep) r.letters.insert(r.letters.end(), once.begin(), once.end());
  }
  return free_reduce(r);
}

long exponent_sum(const MixedBraidWord& wd) {
  long e = 0;
  for (auto& l : expand_loops(wd).letters)
    if (l.kind == LetterKind::Sigma) e += l.exponent;
  return e;
}

MixedBraidWord bbm(const MixedBraidWord& wd, int sign) {
  if (sign != 1 && sign != -1) throw InputError("band move sign must be +1 or -1");
  MixedBraidWord r{wd.n + 1, {}};
  for (auto& l : wd.letters) {
    switch (l.kind) {
      case LetterKind::T: r.letters.push_back({LetterKind::TLoop, 1, l.exponent}); break;
      case LetterKind::Sigma: r.letters.push_back(sigma(l.index + 1, l.exponent)); break;
      case LetterKind::TLoop: r.letters.push_back({LetterKind::TLoop, l.index + 1, l.exponent}); break;
      case LetterKind::TLoopPrime:
        // the shifted primed loop is s_{i+1}..s_2 t_1 s_2^-1..s_{i+1}^-1, not t'_{i+1}
        for (int j = l.index + 1; j >= 2; --j) r.letters.push_back(sigma(j, 1));
        r.letters.push_back({LetterKind::TLoop, 1, l.exponent});
        for (int j = 2; j <= l.index + 1; ++j) r.letters.push_back(sigma(j, -1));
        break;
    }
  }
  r.letters.push_back(sigma(1, sign));
  return r;
}

MixedBraidWord conjugate(const MixedBraidWord& wd, const MixedBraidWord& g) {
  return concat(concat(inverse(g), wd), g);
}

MixedBraidWord stabilize(const MixedBraidWord& wd, int sign) {
  if (sign != 1 && sign != -1) throw InputError("stabilization sign must be +1 or -1");
  MixedBraidWord r{wd.n + 1, wd.letters};
  r.letters.push_back(sigma(wd.n, sign));
  return r;
}

MixedBraidWord loop_conjugate(const MixedBraidWord& wd, int sign) {
  if (sign != 1 && sign != -1) throw InputError("loop conjugation sign must be +1 or -1");
  MixedBraidWord r{wd.n, {tee(sign)}};
  r.letters.insert(r.letters.end(), wd.letters.begin(), wd.letters.end());
  r.letters.push_back(tee(-sign));
  return r;
}

}  // namespace skein
