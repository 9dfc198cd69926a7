#include "matforms/words.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "matforms/errors.hpp"

namespace matforms {

const char* alphabet_name(Alphabet a) { return a == Alphabet::GL ? "GL" : "O"; }

void trim(MultiDegree& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

MultiDegree add(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

bool fits_within(const MultiDegree& part, const MultiDegree& whole) {
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (part[i] > (i < whole.size() ? whole[i] : 0)) return false;
  }
  return true;
}

std::uint32_t total(const MultiDegree& d) { return std::accumulate(d.begin(), d.end(), 0u); }

Word::Word(std::vector<Letter> letters, Alphabet alphabet) : letters_(std::move(letters)), alphabet_(alphabet) {
  if (letters_.empty()) throw InvalidArgument("a word must contain at least one letter");
  for (const Letter& l : letters_) {
    if (l.index == 0) throw InvalidArgument("letter indices start at 1");
    if (l.transposed && alphabet_ == Alphabet::GL) {
      throw AlphabetMismatch("transposed letter x" + std::to_string(l.index) + "' in a GL word");
    }
  }
}

Word Word::letter(std::uint32_t index, Alphabet alphabet, bool transposed) {
  return Word({Letter{index, transposed}}, alphabet);
}

Word Word::in_alphabet(Alphabet target) const { return Word(letters_, target); }

Word Word::operator*(const Word& other) const {
  if (alphabet_ != other.alphabet_) throw AlphabetMismatch("cannot concatenate GL and O words");
  std::vector<Letter> l = letters_;
  l.insert(l.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(l), alphabet_);
}

Word Word::pow(std::uint32_t exponent) const {
  if (exponent == 0) throw InvalidArgument("zero power of a word is the unit, not a word");
  std::vector<Letter> l;
  l.reserve(letters_.size() * exponent);
  for (std::uint32_t i = 0; i < exponent; ++i) l.insert(l.end(), letters_.begin(), letters_.end());
  return Word(std::move(l), alphabet_);
}

MultiDegree Word::multidegree() const {
  MultiDegree d;
  for (const Letter& l : letters_) {
    if (d.size() < l.index) d.resize(l.index, 0);
    ++d[l.index - 1];
  }
  return d;
}

std::string Word::str() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += '*';
    s += 'x';
    s += std::to_string(letters_[i].index);
    if (letters_[i].transposed) s += '\'';
  }
  return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.alphabet_ != b.alphabet_) return a.alphabet_ <=> b.alphabet_;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = a.letters_[i].code() <=> b.letters_[i].code();
    if (c != 0) return c;
  }
  return a.size() <=> b.size();
}

std::strong_ordering compare(const Word& a, const Word& b) {
  if (a.alphabet() != b.alphabet()) throw AlphabetMismatch("cannot compare GL and O words");
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = b[i].code() <=> a[i].code();
    if (c != 0) return c;
  }
  return a.size() <=> b.size();
}

Word transpose(const Word& w) {
  if (w.alphabet() != Alphabet::O) throw AlphabetMismatch("transpose requires an O word");
  std::vector<Letter> l(w.letters().rbegin(), w.letters().rend());
  for (Letter& x : l) x = x.flipped();
  return Word(std::move(l), Alphabet::O);
}

namespace {

// Smallest period p dividing the length, via the prefix function.
std::size_t smallest_period(const std::vector<Letter>& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && !(s[i] == s[k])) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  const std::size_t p = n - pi[n - 1];
  return n % p == 0 ? p : n;
}

// Booth's algorithm: start of the lexicographically least rotation of the code sequence.
// Least by code means greatest under compare, since all rotations have equal length.
std::size_t least_rotation(const std::vector<std::uint32_t>& s) {
  const std::size_t n = s.size();
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const std::uint32_t sj = s[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[(k + i + 1) % n]) {
      if (sj < s[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

Word rotate_to_max(const Word& w) {
  std::vector<std::uint32_t> codes;
  codes.reserve(w.size());
  for (const Letter& l : w.letters()) codes.push_back(l.code());
  const std::size_t k = least_rotation(codes);
  std::vector<Letter> l(w.letters().begin() + static_cast<long>(k), w.letters().end());
  l.insert(l.end(), w.letters().begin(), w.letters().begin() + static_cast<long>(k));
  return Word(std::move(l), w.alphabet());
}

}  // namespace

bool is_primitive(const Word& w) { return smallest_period(w.letters()) == w.size(); }

Word primitive_root(const Word& w, std::uint32_t* exponent) {
  const std::size_t p = smallest_period(w.letters());
  if (exponent) *exponent = static_cast<std::uint32_t>(w.size() / p);
  if (p == w.size()) return w;
  return Word(std::vector<Letter>(w.letters().begin(), w.letters().begin() + static_cast<long>(p)), w.alphabet());
}

Word max_rotation(const Word& w) { return rotate_to_max(w); }

CanonicalClass canonicalize(const Word& w) {
  std::uint32_t exponent = 1;
  Word root = primitive_root(w, &exponent);
  Word best = rotate_to_max(root);
  if (w.alphabet() == Alphabet::O) {
    Word other = rotate_to_max(transpose(root));
    if (compare(other, best) > 0) best = std::move(other);
  }
  return CanonicalClass{std::move(best), exponent};
}

namespace {

struct RepKey {
  MultiDegree mdeg;
  Alphabet alphabet;
  auto operator<=>(const RepKey&) const = default;
};

void extend(std::vector<Letter>& prefix, MultiDegree& remaining, std::size_t left, Alphabet alphabet,
            std::vector<Word>& out) {
  if (left == 0) {
    Word w(prefix, alphabet);
    if (!is_primitive(w)) return;
    CanonicalClass c = canonicalize(w);
    if (c.rep == w) out.push_back(std::move(w));
    return;
  }
  for (std::uint32_t i = 0; i < remaining.size(); ++i) {
    if (remaining[i] == 0) continue;
    --remaining[i];
    for (int t = 0; t < (alphabet == Alphabet::O ? 2 : 1); ++t) {
      prefix.push_back(Letter{i + 1, t == 1});
      extend(prefix, remaining, left - 1, alphabet, out);
      prefix.pop_back();
    }
    ++remaining[i];
  }
}

}  // namespace

const std::vector<Word>& enumerate_reps(const MultiDegree& mdeg_in, Alphabet alphabet) {
  static std::mutex mutex;
  static std::map<RepKey, std::vector<Word>> cache;

  MultiDegree mdeg = mdeg_in;
  trim(mdeg);
  RepKey key{mdeg, alphabet};
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<Word> out;
  const std::uint32_t len = total(mdeg);
  if (len > 0) {
    // The maximal representative starts with the smallest index present, untransposed.
    std::uint32_t first = 0;
    while (mdeg[first] == 0) ++first;
    std::vector<Letter> prefix{Letter{first + 1, false}};
    --mdeg[first];
    extend(prefix, mdeg, len - 1, alphabet, out);
    ++mdeg[first];
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return compare(a, b) > 0; });
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

namespace {
int mobius(std::uint32_t n) {
  int m = 1;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}
}  // namespace

std::uint64_t necklace_count(std::uint32_t u, std::uint32_t m) {
  long long sum = 0;
  for (std::uint32_t d = 1; d <= m; ++d) {
    if (m % d) continue;
    long long pw = 1;
    for (std::uint32_t i = 0; i < m / d; ++i) pw *= u;
    sum += mobius(d) * pw;
  }
  return static_cast<std::uint64_t>(sum / m);
}

}  // namespace matforms
