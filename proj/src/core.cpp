#include "linemetric/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace linemetric {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("Perm: empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("Perm: images are not a bijection of [n]");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Perm(std::move(images));
}

Perm Perm::parse(std::string_view text) {
  std::vector<int> images;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty() || token.size() > 6 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("Perm: malformed permutation '" + std::string(text) + "'");
    }
    images.push_back(std::stoi(std::string(token)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) {
    inv[static_cast<std::size_t>(images_[j] - 1)] = static_cast<int>(j) + 1;
  }
  return Perm(std::move(inv));
}

Perm Perm::antipode() const {
  std::vector<int> anti(images_.size());
  const int n = size();
  std::transform(images_.begin(), images_.end(), anti.begin(), [n](int v) { return n + 1 - v; });
  return Perm(std::move(anti));
}

bool Perm::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] != static_cast<int>(j) + 1) return false;
  }
  return true;
}

Perm Perm::canonical() const {
  Perm anti = antipode();
  return anti.images_ < images_ ? anti : *this;
}

std::string Perm::str() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (j) os << ',';
    os << images_[j];
  }
  return os.str();
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: dimension mismatch");
  std::vector<int> images(static_cast<std::size_t>(a.size()));
  for (int j = 1; j <= a.size(); ++j) images[static_cast<std::size_t>(j - 1)] = a(b(j));
  return Perm(std::move(images));
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// ---------------------------------------------------------------- Word

Word::Word(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n < 1 || n > kMaxLength) throw std::invalid_argument("Word: length must lie in [1, 63]");
  if ((mask >> n) != 0) throw std::invalid_argument("Word: mask has bits beyond the word length");
}

Word Word::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxLength)) {
    throw std::invalid_argument("Word: length must lie in [1, 63]");
  }
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '1') {
      mask |= std::uint64_t{1} << j;
    } else if (text[j] != '0') {
      throw std::invalid_argument("Word: expected a string over {0,1}, got '" + std::string(text) + "'");
    }
  }
  return Word(static_cast<int>(text.size()), mask);
}

Word Word::prefix(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("Word::prefix: k out of range");
  return Word(n, k == 0 ? 0 : (k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1));
}

int Word::count() const { return std::popcount(mask_); }

Word Word::complement() const {
  const std::uint64_t full = (std::uint64_t{1} << n_) - 1;
  return Word(n_, full & ~mask_);
}

Word Word::image(const Perm& pi) const {
  if (pi.size() != n_) throw std::invalid_argument("Word::image: dimension mismatch");
  std::uint64_t m = 0;
  for (int j = 1; j <= n_; ++j) {
    if (contains(j)) m |= std::uint64_t{1} << (pi(j) - 1);
  }
  return Word(n_, m);
}

Word Word::preimage(const Perm& pi) const {
  if (pi.size() != n_) throw std::invalid_argument("Word::preimage: dimension mismatch");
  std::uint64_t m = 0;
  for (int j = 1; j <= n_; ++j) {
    if (contains(pi(j))) m |= std::uint64_t{1} << (j - 1);
  }
  return Word(n_, m);
}

std::string Word::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int j = 1; j <= n_; ++j) {
    if (contains(j)) s[static_cast<std::size_t>(j - 1)] = '1';
  }
  return s;
}

std::vector<Word> proper_words(int n) {
  std::vector<Word> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m = 1; m < full; ++m) out.emplace_back(n, m);
  return out;
}

WordStructure word_structure(const Word& u) {
  if (!u.proper()) throw std::invalid_argument("word_structure: word must be proper and non-empty");
  WordStructure ws;
  const int n = u.size();
  int start = 1;
  for (int j = 2; j <= n + 1; ++j) {
    if (j == n + 1 || u.contains(j) != u.contains(start)) {
      (u.contains(start) ? ws.hills : ws.valleys).push_back(Run{start, j - 1});
      if (j <= n) ++ws.slopes;
      start = j;
    }
  }
  ws.alternating = ws.slopes == n - 1;
  return ws;
}

std::vector<int> run_lengths(const Word& u) {
  std::vector<int> lengths;
  int len = 1;
  for (int j = 2; j <= u.size(); ++j) {
    if (u.contains(j) == u.contains(j - 1)) {
      ++len;
    } else {
      lengths.push_back(len);
      len = 1;
    }
  }
  lengths.push_back(len);
  return lengths;
}

// ---------------------------------------------------------------- SymZMat

const Rat SymZMat::kZero{};

SymZMat::SymZMat(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SymZMat: dimension must be positive");
  upper_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
}

SymZMat SymZMat::all_ones(int n) {
  SymZMat m(n);
  std::fill(m.upper_.begin(), m.upper_.end(), Rat(1));
  return m;
}

SymZMat SymZMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymZMat m(n);
  for (int k = 1; k <= n; ++k) {
    const auto& row = rows[static_cast<std::size_t>(k - 1)];
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("SymZMat::from_rows: matrix is not square");
    if (!row[static_cast<std::size_t>(k - 1)].is_zero()) {
      throw std::invalid_argument("SymZMat::from_rows: non-zero diagonal entry");
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      const Rat& a = rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)];
      const Rat& b = rows[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(k - 1)];
      if (a != b) {
        throw std::invalid_argument("SymZMat::from_rows: asymmetric entries at (" + std::to_string(k) + "," +
                                    std::to_string(l) + ")");
      }
      m.set(k, l, a);
    }
  }
  return m;
}

std::size_t SymZMat::index(int k, int l) const {
  if (k > l) std::swap(k, l);
  // row-major strict upper triangle, 1-based (k,l)
  const auto kk = static_cast<std::size_t>(k - 1);
  const auto nn = static_cast<std::size_t>(n_);
  return kk * nn - kk * (kk + 1) / 2 + static_cast<std::size_t>(l - k - 1);
}

const Rat& SymZMat::at(int k, int l) const {
  if (k < 1 || l < 1 || k > n_ || l > n_) throw std::out_of_range("SymZMat::at: index out of range");
  if (k == l) return kZero;
  return upper_[index(k, l)];
}

void SymZMat::set(int k, int l, Rat value) {
  if (k < 1 || l < 1 || k > n_ || l > n_) throw std::out_of_range("SymZMat::set: index out of range");
  if (k == l) {
    if (!value.is_zero()) throw std::invalid_argument("SymZMat::set: diagonal must stay zero");
    return;
  }
  upper_[index(k, l)] = std::move(value);
}

SymZMat& SymZMat::operator+=(const SymZMat& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymZMat: dimension mismatch");
  for (std::size_t i = 0; i < upper_.size(); ++i) upper_[i] += o.upper_[i];
  return *this;
}

SymZMat& SymZMat::operator-=(const SymZMat& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymZMat: dimension mismatch");
  for (std::size_t i = 0; i < upper_.size(); ++i) upper_[i] -= o.upper_[i];
  return *this;
}

SymZMat& SymZMat::operator*=(const Rat& s) {
  for (auto& e : upper_) e *= s;
  return *this;
}

Rat inner_product(const SymZMat& a, const SymZMat& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner_product: dimension mismatch");
  mpq_class acc = 0;
  const auto ua = a.upper();
  const auto ub = b.upper();
  for (std::size_t i = 0; i < ua.size(); ++i) acc += ua[i].raw() * ub[i].raw();
  return Rat(mpq_class(2 * acc));
}

SymZMat conjugate(const SymZMat& m, const Perm& sigma) {
  if (m.size() != sigma.size()) throw std::invalid_argument("conjugate: dimension mismatch");
  const int n = m.size();
  SymZMat out(n);
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) out.set(k, l, m.at(sigma(k), sigma(l)));
  }
  return out;
}

std::vector<std::pair<int, int>> upper_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) pairs.emplace_back(k, l);
  }
  return pairs;
}

}  // namespace linemetric
