#pragma once

#include <string>
#include <vector>

#include "hilbloc/linform.hpp"

namespace hilbloc {

// Weakly decreasing positive parts. Row i holds parts[i] boxes (i, 0..parts[i]-1).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  Partition conjugate() const;
  bool contains(int i, int j) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Box {
  int i = 0;
  int j = 0;
};

// Lexicographic order on the parts vectors: (1,1,1,1) < (2,1,1) < ... < (4).
std::vector<Partition> enumerate_partitions(int n);

struct ArmLeg {
  int arm;
  int leg;
};

// Throws std::out_of_range when the box is not in the diagram.
ArmLeg arm_leg(const Partition& p, Box b);

struct VertexConvention {
  bool swap_arm_leg = false;
  // Tautological characters are mu + taut_sign * (i*w1 + j*w2).
  int taut_sign = -1;
};

using WeightList = std::vector<LinForm>;

// Two weights per box; throws ZeroWeight if one vanishes.
WeightList tangent_weights(const Partition& p, const LinForm& w1, const LinForm& w2,
                           const VertexConvention& conv = {});
WeightList twisted_tangent_weights(const Partition& p, const LinForm& w1, const LinForm& w2,
                                   const LinForm& mu, const VertexConvention& conv = {});
WeightList taut_weights(const Partition& p, const LinForm& w1, const LinForm& w2, const LinForm& mu,
                        const VertexConvention& conv = {});

}  // namespace hilbloc
