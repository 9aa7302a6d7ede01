#include "wqed/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wqed {

namespace {

constexpr std::complex<double> kIPow[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliOperator::PauliOperator(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 24)
    throw std::invalid_argument("PauliOperator: n_qubits out of range [1, 24]");
}

void PauliOperator::insert(std::uint64_t x, std::uint64_t z, double coeff) {
  auto key_less = [](const PauliTerm& t, std::pair<std::uint64_t, std::uint64_t> key) {
    return std::pair{t.x_mask, t.z_mask} < key;
  };
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{x, z}, key_less);
  if (it != terms_.end() && it->x_mask == x && it->z_mask == z) {
    it->coeff += coeff;
    if (it->coeff == 0.0) terms_.erase(it);
    return;
  }
  if (coeff == 0.0) return;
  terms_.insert(it, PauliTerm{x, z, coeff});
}

void PauliOperator::add_term(double coeff, const std::vector<Pauli>& labels) {
  if (static_cast<int>(labels.size()) != n_qubits_)
    throw std::invalid_argument("add_term: label count must equal n_qubits");
  std::uint64_t x = 0, z = 0;
  for (int q = 0; q < n_qubits_; ++q) {
    const std::uint64_t bit = 1ull << (n_qubits_ - 1 - q);
    switch (labels[q]) {
      case Pauli::I: break;
      case Pauli::X: x |= bit; break;
      case Pauli::Y: x |= bit; z |= bit; break;
      case Pauli::Z: z |= bit; break;
    }
  }
  insert(x, z, coeff);
}

void PauliOperator::add_term(double coeff,
                             const std::vector<std::pair<int, Pauli>>& sites) {
  std::uint64_t x = 0, z = 0, seen = 0;
  for (const auto& [q, p] : sites) {
    if (q < 0 || q >= n_qubits_)
      throw std::invalid_argument("add_term: qubit index out of range");
    const std::uint64_t bit = 1ull << (n_qubits_ - 1 - q);
    if (seen & bit) throw std::invalid_argument("add_term: repeated qubit");
    seen |= bit;
    switch (p) {
      case Pauli::I: break;
      case Pauli::X: x |= bit; break;
      case Pauli::Y: x |= bit; z |= bit; break;
      case Pauli::Z: z |= bit; break;
    }
  }
  insert(x, z, coeff);
}

void PauliOperator::scale(double factor) {
  if (factor == 0.0) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.coeff *= factor;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& other) {
  if (other.n_qubits_ != n_qubits_)
    throw std::invalid_argument("PauliOperator +=: qubit counts differ");
  for (const auto& t : other.terms_) insert(t.x_mask, t.z_mask, t.coeff);
  return *this;
}

bool PauliOperator::operator==(const PauliOperator& other) const {
  if (n_qubits_ != other.n_qubits_ || terms_.size() != other.terms_.size())
    return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].x_mask != other.terms_[i].x_mask ||
        terms_[i].z_mask != other.terms_[i].z_mask ||
        terms_[i].coeff != other.terms_[i].coeff)
      return false;
  }
  return true;
}

void PauliOperator::apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
  const std::int64_t dim = std::int64_t{1} << n_qubits_;
  if (in.size() != dim)
    throw std::invalid_argument("PauliOperator::apply: dimension mismatch");
  out.setZero(dim);
  for (const auto& t : terms_) {
    const std::complex<double> c =
        t.coeff * kIPow[std::popcount(t.x_mask & t.z_mask) & 3];
    const std::uint64_t x = t.x_mask, z = t.z_mask;
    if (x == 0) {
      for (std::int64_t b = 0; b < dim; ++b)
        out[b] += (parity(b & z) ? -c : c) * in[b];
    } else {
      for (std::int64_t b = 0; b < dim; ++b)
        out[static_cast<std::int64_t>(b ^ x)] += (parity(b & z) ? -c : c) * in[b];
    }
  }
}

Eigen::VectorXcd PauliOperator::apply(const Eigen::VectorXcd& in) const {
  Eigen::VectorXcd out;
  apply(in, out);
  return out;
}

double PauliOperator::expectation(const Eigen::VectorXcd& psi) const {
  const std::int64_t dim = std::int64_t{1} << n_qubits_;
  if (psi.size() != dim)
    throw std::invalid_argument("PauliOperator::expectation: dimension mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& t : terms_) {
    const std::complex<double> c =
        t.coeff * kIPow[std::popcount(t.x_mask & t.z_mask) & 3];
    std::complex<double> term_acc = 0.0;
    for (std::int64_t b = 0; b < dim; ++b) {
      const std::complex<double> v = (parity(b & t.z_mask) ? -psi[b] : psi[b]);
      term_acc += std::conj(psi[static_cast<std::int64_t>(b ^ t.x_mask)]) * v;
    }
    acc += c * term_acc;
  }
  if (std::abs(acc.imag()) > 1e-10 * std::max(1.0, std::abs(acc.real())))
    throw std::logic_error("PauliOperator::expectation: non-real value " +
                           std::to_string(acc.imag()));
  return acc.real();
}

double PauliOperator::expectation(const Eigen::MatrixXcd& rho) const {
  const std::int64_t dim = std::int64_t{1} << n_qubits_;
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("PauliOperator::expectation: dimension mismatch");
  std::complex<double> acc = 0.0;
  // tr(P rho) = sum_b phase(b) rho(b, b ^ x): P maps |b> to phase(b)|b ^ x>.
  for (const auto& t : terms_) {
    const std::complex<double> c =
        t.coeff * kIPow[std::popcount(t.x_mask & t.z_mask) & 3];
    std::complex<double> term_acc = 0.0;
    for (std::int64_t b = 0; b < dim; ++b) {
      const std::complex<double> v = rho(b, static_cast<std::int64_t>(b ^ t.x_mask));
      term_acc += parity(b & t.z_mask) ? -v : v;
    }
    acc += c * term_acc;
  }
  if (std::abs(acc.imag()) > 1e-8 * std::max(1.0, std::abs(acc.real())))
    throw std::logic_error("PauliOperator::expectation(rho): non-real value");
  return acc.real();
}

Eigen::MatrixXcd PauliOperator::to_dense() const {
  if (n_qubits_ > 12)
    throw std::invalid_argument("PauliOperator::to_dense: n_qubits > 12");
  const std::int64_t dim = std::int64_t{1} << n_qubits_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : terms_) {
    const std::complex<double> c =
        t.coeff * kIPow[std::popcount(t.x_mask & t.z_mask) & 3];
    for (std::int64_t b = 0; b < dim; ++b)
      m(static_cast<std::int64_t>(b ^ t.x_mask), b) += parity(b & t.z_mask) ? -c : c;
  }
  return m;
}

bool PauliOperator::terms_mutually_commute() const {
  // Two strings commute iff they differ (both non-identity, different axes)
  // on an even number of qubits: parity(x1 & z2) == parity(x2 & z1).
  for (size_t i = 0; i < terms_.size(); ++i)
    for (size_t j = i + 1; j < terms_.size(); ++j) {
      if (parity(terms_[i].x_mask & terms_[j].z_mask) !=
          parity(terms_[j].x_mask & terms_[i].z_mask))
        return false;
    }
  return true;
}

std::vector<Pauli> PauliOperator::term_labels(const PauliTerm& term) const {
  std::vector<Pauli> labels(n_qubits_, Pauli::I);
  for (int q = 0; q < n_qubits_; ++q) {
    const std::uint64_t bit = 1ull << (n_qubits_ - 1 - q);
    const bool x = term.x_mask & bit, z = term.z_mask & bit;
    labels[q] = x ? (z ? Pauli::Y : Pauli::X) : (z ? Pauli::Z : Pauli::I);
  }
  return labels;
}

std::string PauliOperator::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff << "*";
    for (Pauli p : term_labels(t)) os << pauli_char(p);
  }
  if (first) os << "0";
  return os.str();
}

double PauliOperator::coeff_norm1() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

}  // namespace wqed
