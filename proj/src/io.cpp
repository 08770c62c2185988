#include "sdepthkit/io.hpp"

#include <cctype>
#include <limits>

#include "sdepthkit/error.hpp"

namespace sdepthkit {

namespace {

class Lexer {
 public:
  Lexer(std::string_view text, const RingContext& ring) : text_(text), ring_(ring) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::uint64_t uint() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > kMaxExponent) throw ParseError("exponent overflow", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected an exponent");
    return value;
  }

  std::size_t variable() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      fail("expected a variable");
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    const std::size_t index = ring_.index_of(name);
    if (index >= ring_.num_vars()) throw ParseError("unknown variable '" + name + "'", start);
    return index;
  }

  Monomial term() {
    std::vector<std::uint64_t> exps(ring_.num_vars(), 0);
    const std::size_t start = position();
    do {
      const std::size_t var = variable();
      std::uint64_t power = 1;
      if (accept('^')) power = uint();
      exps[var] += power;
      if (exps[var] > kMaxExponent) throw ParseError("exponent overflow", start);
    } while (accept('*'));
    return Monomial(std::vector<Exponent>(exps.begin(), exps.end()));
  }

  // True when the rest of the text is exactly `word`.
  bool rest_is(std::string_view word) {
    skip_space();
    std::size_t end = text_.size();
    while (end > pos_ && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    if (text_.substr(pos_, end - pos_) != word) return false;
    pos_ = text_.size();
    return true;
  }

 private:
  std::string_view text_;
  const RingContext& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, const RingContext& ring) {
  Lexer lex(text, ring);
  if (lex.rest_is("0")) return MonomialIdeal::zero(ring);
  std::vector<Monomial> gens;
  do {
    gens.push_back(lex.term());
  } while (lex.accept(','));
  if (!lex.at_end()) lex.fail("unexpected character");
  return minimalize(gens, ring);
}

Monomial parse_monomial(std::string_view text, const RingContext& ring) {
  Lexer lex(text, ring);
  if (lex.rest_is("1")) return Monomial(ring.num_vars());
  Monomial m = lex.term();
  if (!lex.at_end()) lex.fail("unexpected character");
  return m;
}

std::string format_decomposition(const StanleyDecomposition& d) {
  const RingContext& ring = d.target.ring();
  std::string out;
  for (const auto& space : d.spaces) {
    out += to_string(space.u, ring);
    out += " ;";
    bool first = true;
    for (auto j : space.z.indices()) {
      out += first ? " " : ",";
      out += ring.name(j);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::vector<StanleySpace> parse_decomposition(std::string_view text, const RingContext& ring) {
  std::vector<StanleySpace> spaces;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      const std::size_t semi = line.find(';');
      if (semi == std::string_view::npos) throw ParseError("expected ';' in Stanley space", line_start + line.size());
      StanleySpace space;
      try {
        space.u = parse_monomial(line.substr(0, semi), ring);
      } catch (const ParseError& e) {
        throw ParseError("bad monomial", line_start + e.position());
      }
      const std::string_view rest = line.substr(semi + 1);
      if (rest.find_first_not_of(" \t\r") != std::string_view::npos) {
        Lexer lex(rest, ring);
        do {
          const std::size_t var = lex.variable();
          if (space.z.contains(var)) throw ParseError("repeated variable", line_start + semi + 1 + lex.position());
          space.z.insert(var);
        } while (lex.accept(','));
        if (!lex.at_end()) throw ParseError("unexpected character", line_start + semi + 1 + lex.position());
      }
      spaces.push_back(std::move(space));
    }
    line_start = line_end + 1;
  }
  return spaces;
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw InvalidArgument("empty sampling range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t range = span + 1;
  // Largest multiple of range that fits, so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + x % range;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(seed) ^ index);
}

namespace {

void check_shape(std::size_t n, Exponent max_exp) {
  if (n < 1 || n > kMaxVariables) throw InvalidArgument("number of variables out of range");
  if (max_exp < 1 || max_exp > kMaxExponent) throw InvalidArgument("max exponent out of range");
}

VarSet random_support(Rng& rng, std::size_t n) {
  const std::uint64_t top = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return VarSet(rng.uniform(1, top));
}

}  // namespace

MonomialIdeal random_irreducible(Rng& rng, std::size_t n, Exponent max_exp) {
  check_shape(n, max_exp);
  const RingContext ring(n);
  std::vector<Monomial> gens;
  for (auto j : random_support(rng, n).indices()) {
    gens.push_back(Monomial::variable(n, j, static_cast<Exponent>(rng.uniform(1, max_exp))));
  }
  return minimalize(gens, ring);
}

MonomialIdeal random_primary(Rng& rng, std::size_t n, Exponent max_exp) {
  check_shape(n, max_exp);
  const RingContext ring(n);
  const auto vars = random_support(rng, n).indices();
  std::vector<Exponent> power(n, 0);
  std::vector<Monomial> gens;
  for (auto j : vars) {
    power[j] = static_cast<Exponent>(rng.uniform(1, max_exp));
    gens.push_back(Monomial::variable(n, j, power[j]));
  }
  const std::uint64_t extra = rng.uniform(0, 2);
  for (std::uint64_t k = 0; k < extra; ++k) {
    std::vector<Exponent> e(n, 0);
    for (auto j : vars) e[j] = static_cast<Exponent>(rng.uniform(0, power[j] - 1));
    Monomial m(std::move(e));
    if (!m.is_one()) gens.push_back(std::move(m));
  }
  return minimalize(gens, ring);
}

MonomialIdeal random_ideal(Rng& rng, std::size_t n, Exponent max_exp, std::size_t max_gens) {
  check_shape(n, max_exp);
  if (max_gens < 1) throw InvalidArgument("need at least one generator");
  const RingContext ring(n);
  const std::uint64_t count = rng.uniform(1, max_gens);
  std::vector<Monomial> gens;
  while (gens.size() < count) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t j = 0; j < n; ++j) e[j] = static_cast<Exponent>(rng.uniform(0, max_exp));
    Monomial m(std::move(e));
    if (!m.is_one()) gens.push_back(std::move(m));
  }
  return minimalize(gens, ring);
}

}  // namespace sdepthkit
