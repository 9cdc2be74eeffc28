#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Geometry>

#include "gaussideal/linalg.hpp"

namespace gaussideal {

enum class GroupId { U1, SU2 };

std::string to_string(GroupId g);
GroupId parse_group(const std::string& name);

/// Irreducible representation label. U(1): the integer charge n. SU(2): twice the spin, 2j >= 0.
struct IrrepLabel {
  int value = 0;
  friend bool operator==(IrrepLabel, IrrepLabel) = default;
  friend auto operator<=>(IrrepLabel, IrrepLabel) = default;
};

void validate(GroupId g, IrrepLabel label);
std::size_t irrep_dim(GroupId g, IrrepLabel label);
/// Human-readable label: "-2" for U(1), "1/2" or "1" for SU(2).
std::string label_text(GroupId g, IrrepLabel label);
/// Numeric value: the charge for U(1), the spin j for SU(2).
double label_number(GroupId g, IrrepLabel label);
/// Parses "2", "-1" (U(1)) or "1/2", "3/2", "1" (SU(2), spin j).
IrrepLabel parse_label(GroupId g, const std::string& text);

/// All labels with |n| <= bound (U(1), ascending charge) or 2j <= bound (SU(2), ascending spin).
std::vector<IrrepLabel> labels_within(GroupId g, IrrepLabel bound);

/// Element of U(1) (an angle in [0, 2pi)) or SU(2) (a unit quaternion).
class GroupPoint {
 public:
  static GroupPoint identity(GroupId g);
  static GroupPoint u1(double angle);
  /// Renormalizes; rejects quaternions farther than 1e-6 from the unit sphere.
  static GroupPoint su2(const Eigen::Quaterniond& q);

  GroupId group() const { return group_; }
  double angle() const { return angle_; }
  const Eigen::Quaterniond& quaternion() const { return quat_; }

  GroupPoint operator*(const GroupPoint& rhs) const;
  GroupPoint inverse() const;

  /// Distance that is zero exactly on equal elements (angle on the circle, quaternion norm).
  double distance(const GroupPoint& other) const;

 private:
  GroupPoint(GroupId g, double angle, const Eigen::Quaterniond& q) : group_(g), angle_(angle), quat_(q) {}
  GroupId group_;
  double angle_;
  Eigen::Quaterniond quat_;
};

/// Number of Lie basis elements: 1 for U(1), 3 for SU(2).
std::size_t lie_dim(GroupId g);

struct LieBasisIndex {
  std::size_t index = 0;
};

/// exp(sum_a coeffs[a] X_a). For SU(2), X_a corresponds to -(i/2) Pauli_a.
GroupPoint exp_lie(GroupId g, std::span<const double> coeffs);
GroupPoint exp_basis(GroupId g, LieBasisIndex x, double t);

/// D^label(point), in the weight basis m = j, j-1, ..., -j for SU(2).
Matrix irrep_matrix(GroupId g, IrrepLabel label, const GroupPoint& point);

/// dD^label(X_x), anti-hermitian.
Matrix irrep_generator(GroupId g, IrrepLabel label, LieBasisIndex x);

/// Casimir scalar: n^2 for U(1), j(j+1) for SU(2).
double casimir_eigenvalue(GroupId g, IrrepLabel label);
/// Casimir scalar times 4; exact integer.
long casimir_quarters(GroupId g, IrrepLabel label);

struct HaarNode {
  GroupPoint point;
  double weight;
};

/// Finite Haar quadrature, exact on products D^a conj(D^b) with a, b <= band
/// (equivalently on single coefficients up to twice the band).
struct HaarScheme {
  GroupId group;
  IrrepLabel band;
  std::vector<HaarNode> nodes;
};

HaarScheme haar_scheme(GroupId g, IrrepLabel band);

}  // namespace gaussideal
