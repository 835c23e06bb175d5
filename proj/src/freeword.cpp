#include "crslab/freeword.hpp"

#include <cctype>
#include <sstream>

#include "crslab/errors.hpp"
#include "crslab/numtheory.hpp"

namespace crslab::freegrp {

FreeWord FreeWord::reduce(std::uint32_t rank, const std::vector<Syllable>& syllables) {
  FreeWord w(rank);
  for (const auto& s : syllables) {
    if (s.gen < 1 || s.gen > rank) {
      throw domain_error("FreeWord: generator index out of range");
    }
    if (s.exp == 0) continue;
    if (!w.syl_.empty() && w.syl_.back().gen == s.gen) {
      w.syl_.back().exp += s.exp;
      if (w.syl_.back().exp == 0) w.syl_.pop_back();
    } else {
      w.syl_.push_back(s);
    }
  }
  return w;
}

FreeWord FreeWord::generator(std::uint32_t rank, std::uint32_t index, std::int64_t exp) {
  return reduce(rank, {Syllable{index, exp}});
}

std::uint64_t FreeWord::length() const {
  std::uint64_t len = 0;
  for (const auto& s : syl_) len += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
  return len;
}

std::string FreeWord::to_string() const {
  if (syl_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < syl_.size(); ++i) {
    if (i) out << ' ';
    out << 'x' << syl_[i].gen;
    if (syl_[i].exp != 1) out << '^' << syl_[i].exp;
  }
  return out.str();
}

FreeWord FreeWord::parse(std::uint32_t rank, const std::string& text) {
  std::vector<Syllable> syllables;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    if (token.size() < 2 || token[0] != 'x') {
      throw domain_error("FreeWord: bad token '" + token + "'");
    }
    const std::size_t caret = token.find('^');
    const std::string idx_text = token.substr(1, caret == std::string::npos ? caret : caret - 1);
    if (idx_text.empty() || idx_text.find_first_not_of("0123456789") != std::string::npos) {
      throw domain_error("FreeWord: bad generator index in '" + token + "'");
    }
    std::int64_t exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = std::stoll(token.substr(caret + 1));
      } catch (const std::exception&) {
        throw domain_error("FreeWord: bad exponent in '" + token + "'");
      }
    }
    syllables.push_back(Syllable{static_cast<std::uint32_t>(std::stoull(idx_text)), exp});
  }
  return reduce(rank, syllables);
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw domain_error("multiply: rank mismatch");
  std::vector<Syllable> syllables = u.syllables();
  syllables.insert(syllables.end(), v.syllables().begin(), v.syllables().end());
  return FreeWord::reduce(u.rank(), syllables);
}

FreeWord invert(const FreeWord& u) {
  std::vector<Syllable> syllables;
  for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it) {
    syllables.push_back(Syllable{it->gen, -it->exp});
  }
  return FreeWord::reduce(u.rank(), syllables);
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

FreeWord adyan_word(std::uint32_t n, std::uint64_t p) {
  if (n == 0) throw domain_error("adyan_word: n must be >= 1");
  if (!finab::is_prime(p)) {
    throw domain_error("adyan_word: p = " + std::to_string(p) + " is not prime");
  }
  const std::int64_t np = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(p);
  std::vector<Syllable> syllables;
  syllables.reserve(std::size_t(4) * n);
  for (std::uint32_t block = 0; block < n; ++block) {
    syllables.push_back(Syllable{1, np});
    syllables.push_back(Syllable{2, np});
    syllables.push_back(Syllable{1, -np});
    syllables.push_back(Syllable{2, -np});
  }
  return FreeWord::reduce(2, syllables);
}

}  // namespace crslab::freegrp
