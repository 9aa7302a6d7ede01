#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wqed {

enum class Pauli : std::uint8_t { I, X, Y, Z };

// One Pauli string with a real coefficient. Qubit q maps to bit (n-1-q) of
// the basis index, i.e. qubit 0 is the most significant bit. x_mask marks
// qubits carrying X or Y, z_mask marks qubits carrying Z or Y; a qubit set in
// both masks carries Y. The string operator is the literal tensor product of
// sigma matrices (the i^{#Y} factor is derived from the masks on application),
// so a real coefficient keeps the term Hermitian.
struct PauliTerm {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  double coeff = 0.0;
};

// Weighted sum of Pauli strings with real coefficients (Hermitian by
// construction). Terms are kept merged, sorted by (x_mask, z_mask), and
// exact-zero coefficients are dropped, so equal operators compare equal.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  int n_terms() const { return static_cast<int>(terms_.size()); }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  /// Adds coeff * (string given as per-qubit labels, one per qubit).
  void add_term(double coeff, const std::vector<Pauli>& labels);

  /// Adds coeff * (product of single-qubit Paulis at the given sites);
  /// unnamed qubits act as identity. Repeated sites are invalid.
  void add_term(double coeff, const std::vector<std::pair<int, Pauli>>& sites);

  void scale(double factor);
  PauliOperator& operator+=(const PauliOperator& other);
  friend PauliOperator operator+(PauliOperator a, const PauliOperator& b) {
    a += b;
    return a;
  }
  friend PauliOperator operator*(double s, PauliOperator op) {
    op.scale(s);
    return op;
  }

  bool operator==(const PauliOperator& other) const;

  /// out = H * in. Both must have dimension 2^n. out is overwritten.
  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& in) const;

  /// <psi|H|psi> for a normalized or unnormalized vector. The imaginary part
  /// is a numerical residue of a Hermitian form; it is checked against 1e-10
  /// and discarded.
  double expectation(const Eigen::VectorXcd& psi) const;

  /// tr(H rho).
  double expectation(const Eigen::MatrixXcd& rho) const;

  /// Dense 2^n x 2^n matrix. Guarded to n <= 12; intended for small-system
  /// solvers and test oracles, not production paths.
  Eigen::MatrixXcd to_dense() const;

  /// True when every pair of strings commutes (symplectic criterion), which
  /// licenses the factorized product-of-exponentials gate path.
  bool terms_mutually_commute() const;

  /// Per-qubit labels of one term, qubit 0 first.
  std::vector<Pauli> term_labels(const PauliTerm& term) const;

  std::string to_string() const;

  /// Largest sum of |coeff| (a cheap upper bound on the spectral norm, used
  /// to scale breakdown thresholds in Krylov code).
  double coeff_norm1() const;

 private:
  void insert(std::uint64_t x, std::uint64_t z, double coeff);

  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

char pauli_char(Pauli p);

}  // namespace wqed
