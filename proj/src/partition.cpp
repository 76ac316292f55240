#include "hilbloc/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "hilbloc/errors.hpp"

namespace hilbloc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[k];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0]);
  for (int row : parts_)
    for (int j = 0; j < row; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::contains(int i, int j) const {
  return i >= 0 && j >= 0 && i < rows() && j < parts_[i];
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

namespace {

void build(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    build(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  build(n, n, cur, out);
  std::sort(out.begin(), out.end(),
            [](const Partition& x, const Partition& y) { return x.parts() < y.parts(); });
  return out;
}

ArmLeg arm_leg(const Partition& p, Box b) {
  if (!p.contains(b.i, b.j))
    throw std::out_of_range("box (" + std::to_string(b.i) + "," + std::to_string(b.j) + ") not in " +
                            p.to_string());
  int leg = 0;
  while (p.contains(b.i + leg + 1, b.j)) ++leg;
  return {p.parts()[b.i] - b.j - 1, leg};
}

WeightList tangent_weights(const Partition& p, const LinForm& w1, const LinForm& w2,
                           const VertexConvention& conv) {
  WeightList out;
  out.reserve(2 * p.size());
  Partition c = p.conjugate();
  for (int i = 0; i < p.rows(); ++i) {
    for (int j = 0; j < p.parts()[i]; ++j) {
      std::int64_t arm = p.parts()[i] - j - 1;
      std::int64_t leg = c.parts()[j] - i - 1;
      if (conv.swap_arm_leg) std::swap(arm, leg);
      LinForm x = (leg + 1) * w1 - arm * w2;
      LinForm y = (-leg) * w1 + (arm + 1) * w2;
      if (x.is_zero() || y.is_zero())
        throw ZeroWeight("zero tangent weight at " + p.to_string() + "; chart weights are dependent");
      out.push_back(x);
      out.push_back(y);
    }
  }
  return out;
}

WeightList twisted_tangent_weights(const Partition& p, const LinForm& w1, const LinForm& w2,
                                   const LinForm& mu, const VertexConvention& conv) {
  WeightList out = tangent_weights(p, w1, w2, conv);
  for (auto& w : out) w += mu;
  return out;
}

WeightList taut_weights(const Partition& p, const LinForm& w1, const LinForm& w2, const LinForm& mu,
                        const VertexConvention& conv) {
  WeightList out;
  out.reserve(p.size());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.parts()[i]; ++j) out.push_back(mu + conv.taut_sign * (i * w1 + j * w2));
  return out;
}

}  // namespace hilbloc
