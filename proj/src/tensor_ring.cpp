#include "pgx/tensor_ring.hpp"

#include <sstream>

namespace pgx {

TensorRing::TensorRing(std::shared_ptr<const Ring> r1, Subring k1, std::vector<RElem> basis1,
                       std::shared_ptr<const Ring> r2, Subring k2, std::vector<RElem> basis2,
                       std::map<RElem, RElem> k_iso)
    : r1_(std::move(r1)), r2_(std::move(r2)), k_(std::move(k1)), basis1_(std::move(basis1)), basis2_(std::move(basis2)) {
  m1_ = basis1_.size();
  m2_ = basis2_.size();
  kb1_ = k_basis_coordinates(*r1_, k_, basis1_);
  Subring k2s = std::move(k2);
  kb2_ = k_basis_coordinates(*r2_, k2s, basis2_);

  if (k_.size() != k2s.size()) throw std::invalid_argument("tensor base rings differ in size");
  k2_to_k1_.assign(k2s.size(), 0);
  for (std::size_t i = 0; i < k_.size(); ++i) {
    RElem img = k_iso.at(k_.elements[i]);
    k2_to_k1_[k2s.index_of(img)] = static_cast<std::uint32_t>(i);
  }

  std::size_t q = k_.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m1_ * m2_; ++i) {
    total *= q;
    if (total > (1ull << 31)) throw std::invalid_argument("tensor ring too large");
  }
  size_ = static_cast<std::size_t>(total);

  auto coords1 = [&](RElem x) { return kb1_.coords[x]; };
  auto coords2 = [&](RElem x) {  // translated to k1 indices
    auto c = kb2_.coords[x];
    for (auto& v : c) v = k2_to_k1_[v];
    return c;
  };
  prod1_.resize(m1_ * m1_);
  for (std::size_t i = 0; i < m1_; ++i)
    for (std::size_t j = 0; j < m1_; ++j) prod1_[i * m1_ + j] = coords1(r1_->mul(basis1_[i], basis1_[j]));
  prod2_.resize(m2_ * m2_);
  for (std::size_t i = 0; i < m2_; ++i)
    for (std::size_t j = 0; j < m2_; ++j) prod2_[i * m2_ + j] = coords2(r2_->mul(basis2_[i], basis2_[j]));

  one_ = embed(r1_->one(), r2_->one());

  if (size_ <= 4096) {
    addtab_.resize(size_ * size_);
    multab_.resize(size_ * size_);
    negtab_.resize(size_);
    for (RElem a = 0; a < size_; ++a) {
      negtab_[a] = neg_direct(a);
      for (RElem b = 0; b < size_; ++b) {
        addtab_[std::size_t(a) * size_ + b] = add_direct(a, b);
        multab_[std::size_t(a) * size_ + b] = mul_direct(a, b);
      }
    }
  }
}

RElem TensorRing::add(RElem a, RElem b) const {
  return addtab_.empty() ? add_direct(a, b) : addtab_[std::size_t(a) * size_ + b];
}

RElem TensorRing::mul(RElem a, RElem b) const {
  return multab_.empty() ? mul_direct(a, b) : multab_[std::size_t(a) * size_ + b];
}

RElem TensorRing::neg(RElem a) const { return negtab_.empty() ? neg_direct(a) : negtab_[a]; }

std::uint32_t TensorRing::kadd(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>(k_.index_of(r1_->add(k_.elements[a], k_.elements[b])));
}
std::uint32_t TensorRing::kmul(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>(k_.index_of(r1_->mul(k_.elements[a], k_.elements[b])));
}
std::uint32_t TensorRing::kneg(std::uint32_t a) const {
  return static_cast<std::uint32_t>(k_.index_of(r1_->neg(k_.elements[a])));
}

std::vector<std::uint32_t> TensorRing::coords(RElem a) const {
  std::vector<std::uint32_t> c(m1_ * m2_);
  std::size_t q = k_.size();
  for (std::size_t i = m1_ * m2_; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(a % q);
    a = static_cast<RElem>(a / q);
  }
  return c;
}

RElem TensorRing::from_coords(const std::vector<std::uint32_t>& c) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc = acc * k_.size() + c[i];
  return static_cast<RElem>(acc);
}

RElem TensorRing::add_direct(RElem a, RElem b) const {
  auto ca = coords(a), cb = coords(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = kadd(ca[i], cb[i]);
  return from_coords(ca);
}

RElem TensorRing::neg_direct(RElem a) const {
  auto ca = coords(a);
  for (auto& v : ca) v = kneg(v);
  return from_coords(ca);
}

RElem TensorRing::mul_direct(RElem a, RElem b) const {
  auto ca = coords(a), cb = coords(b);
  std::vector<std::uint32_t> out(m1_ * m2_, static_cast<std::uint32_t>(k_.index_of(r1_->zero())));
  for (std::size_t i = 0; i < m1_; ++i)
    for (std::size_t j = 0; j < m2_; ++j) {
      std::uint32_t x = ca[i * m2_ + j];
      if (k_.elements[x] == r1_->zero()) continue;
      for (std::size_t s = 0; s < m1_; ++s)
        for (std::size_t t = 0; t < m2_; ++t) {
          std::uint32_t y = cb[s * m2_ + t];
          if (k_.elements[y] == r1_->zero()) continue;
          std::uint32_t c = kmul(x, y);
          const auto& p1 = prod1_[i * m1_ + s];
          const auto& p2 = prod2_[j * m2_ + t];
          for (std::size_t u = 0; u < m1_; ++u) {
            if (k_.elements[p1[u]] == r1_->zero()) continue;
            std::uint32_t cu = kmul(c, p1[u]);
            for (std::size_t v = 0; v < m2_; ++v) {
              if (k_.elements[p2[v]] == r1_->zero()) continue;
              out[u * m2_ + v] = kadd(out[u * m2_ + v], kmul(cu, p2[v]));
            }
          }
        }
    }
  return from_coords(out);
}

RElem TensorRing::embed(RElem a, RElem b) const {
  const auto& c1 = kb1_.coords[a];
  auto c2 = kb2_.coords[b];
  for (auto& v : c2) v = k2_to_k1_[v];
  std::vector<std::uint32_t> out(m1_ * m2_);
  for (std::size_t i = 0; i < m1_; ++i)
    for (std::size_t j = 0; j < m2_; ++j) out[i * m2_ + j] = kmul(c1[i], c2[j]);
  return from_coords(out);
}

RElem TensorRing::scale(RElem k_element_in_r1, RElem x) const {
  auto c = coords(x);
  std::uint32_t ki = static_cast<std::uint32_t>(k_.index_of(k_element_in_r1));
  for (auto& v : c) v = kmul(ki, v);
  return from_coords(c);
}

std::string TensorRing::element_repr(RElem a) const {
  auto c = coords(a);
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << " ";
    os << c[i];
  }
  os << ">";
  return os.str();
}

std::string TensorRing::repr() const {
  std::ostringstream os;
  os << "(" << r1_->repr() << ") (x)_k (" << r2_->repr() << "), dim " << m1_ * m2_ << " over |k|=" << k_.size();
  return os.str();
}

}  // namespace pgx
