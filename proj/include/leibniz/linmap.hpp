#ifndef LEIBNIZ_LINMAP_HPP
#define LEIBNIZ_LINMAP_HPP

#include "leibniz/matrix.hpp"

namespace leibniz {

/// A linear map between coordinate spaces. The matrix has codomain_dim
/// rows and domain_dim columns; columns are images of basis vectors.
class LinearMap {
public:
  LinearMap() = default;
  explicit LinearMap(Matrix m) : m_(std::move(m)) {}

  std::size_t domain_dim() const { return m_.cols(); }
  std::size_t codomain_dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Field& field() const { return m_.field(); }

  Vec apply(const Vec& x) const { return m_.apply(x); }

  /// this ∘ g (apply g first).
  LinearMap compose(const LinearMap& g) const;

  bool operator==(const LinearMap& o) const { return m_ == o.m_; }

private:
  Matrix m_;
};

} // namespace leibniz

#endif
