#include "gaussideal/group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/legendre.hpp>

namespace gaussideal {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

double reduce_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Eigen::Quaterniond su2_basis_exp(std::size_t axis, double t) {
  Eigen::Quaterniond q(std::cos(0.5 * t), 0.0, 0.0, 0.0);
  q.vec()(static_cast<Eigen::Index>(axis)) = std::sin(0.5 * t);
  return q;
}

// Angular momentum matrices J_x, J_y, J_z in the descending weight basis.
Matrix angular_momentum(int two_j, std::size_t axis) {
  const int d = two_j + 1;
  const double j = 0.5 * two_j;
  if (axis == 2) {
    Matrix jz = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) jz(k, k) = j - k;
    return jz;
  }
  Matrix raise = Matrix::Zero(d, d);
  for (int k = 1; k < d; ++k) {
    const double m = j - k;
    raise(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const Matrix lower = raise.adjoint();
  if (axis == 0) return 0.5 * (raise + lower);
  return (raise - lower) / (2.0 * kI);
}

}  // namespace

std::string to_string(GroupId g) { return g == GroupId::U1 ? "U1" : "SU2"; }

GroupId parse_group(const std::string& name) {
  if (name == "U1" || name == "u1" || name == "U(1)") return GroupId::U1;
  if (name == "SU2" || name == "su2" || name == "SU(2)") return GroupId::SU2;
  throw std::invalid_argument("unknown group '" + name + "' (expected U1 or SU2)");
}

void validate(GroupId g, IrrepLabel label) {
  if (g == GroupId::SU2 && label.value < 0)
    throw std::invalid_argument("SU2 irrep label must have nonnegative spin");
}

std::size_t irrep_dim(GroupId g, IrrepLabel label) {
  validate(g, label);
  return g == GroupId::U1 ? 1 : static_cast<std::size_t>(label.value + 1);
}

std::string label_text(GroupId g, IrrepLabel label) {
  if (g == GroupId::U1 || label.value % 2 == 0)
    return std::to_string(g == GroupId::U1 ? label.value : label.value / 2);
  return std::to_string(label.value) + "/2";
}

double label_number(GroupId g, IrrepLabel label) {
  return g == GroupId::U1 ? static_cast<double>(label.value) : 0.5 * label.value;
}

IrrepLabel parse_label(GroupId g, const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("malformed irrep label '" + text + "'");
    return v;
  };
  IrrepLabel out;
  if (g == GroupId::U1) {
    out.value = to_int(text);
  } else if (auto slash = text.find('/'); slash != std::string::npos) {
    if (to_int(text.substr(slash + 1)) != 2) throw std::invalid_argument("SU2 spin must be k or k/2: '" + text + "'");
    out.value = to_int(text.substr(0, slash));
  } else {
    out.value = 2 * to_int(text);
  }
  validate(g, out);
  return out;
}

std::vector<IrrepLabel> labels_within(GroupId g, IrrepLabel bound) {
  if (bound.value < 0) throw std::invalid_argument("truncation bound must be nonnegative");
  std::vector<IrrepLabel> out;
  if (g == GroupId::U1) {
    for (int n = -bound.value; n <= bound.value; ++n) out.push_back({n});
  } else {
    for (int tj = 0; tj <= bound.value; ++tj) out.push_back({tj});
  }
  return out;
}

GroupPoint GroupPoint::identity(GroupId g) { return {g, 0.0, Eigen::Quaterniond::Identity()}; }

GroupPoint GroupPoint::u1(double angle) { return {GroupId::U1, reduce_angle(angle), Eigen::Quaterniond::Identity()}; }

GroupPoint GroupPoint::su2(const Eigen::Quaterniond& q) {
  const double n = q.norm();
  if (std::abs(n - 1.0) > 1e-6) throw std::invalid_argument("SU2 point must be a unit quaternion");
  return {GroupId::SU2, 0.0, q.normalized()};
}

GroupPoint GroupPoint::operator*(const GroupPoint& rhs) const {
  if (group_ != rhs.group_) throw std::invalid_argument("GroupPoint: product of different groups");
  if (group_ == GroupId::U1) return u1(angle_ + rhs.angle_);
  return {GroupId::SU2, 0.0, (quat_ * rhs.quat_).normalized()};
}

GroupPoint GroupPoint::inverse() const {
  if (group_ == GroupId::U1) return u1(-angle_);
  return {GroupId::SU2, 0.0, quat_.conjugate()};
}

double GroupPoint::distance(const GroupPoint& other) const {
  if (group_ != other.group_) throw std::invalid_argument("GroupPoint: distance between different groups");
  if (group_ == GroupId::U1) {
    const double d = reduce_angle(angle_ - other.angle_);
    return std::min(d, kTwoPi - d);
  }
  return (quat_.coeffs() - other.quat_.coeffs()).norm();
}

std::size_t lie_dim(GroupId g) { return g == GroupId::U1 ? 1 : 3; }

GroupPoint exp_lie(GroupId g, std::span<const double> coeffs) {
  if (coeffs.size() != lie_dim(g)) throw std::invalid_argument("exp_lie: wrong number of coefficients");
  if (g == GroupId::U1) return GroupPoint::u1(coeffs[0]);
  const Eigen::Vector3d c(coeffs[0], coeffs[1], coeffs[2]);
  const double t = c.norm();
  if (t == 0.0) return GroupPoint::identity(g);
  Eigen::Quaterniond q;
  q.w() = std::cos(0.5 * t);
  q.vec() = std::sin(0.5 * t) * c / t;
  return GroupPoint::su2(q);
}

GroupPoint exp_basis(GroupId g, LieBasisIndex x, double t) {
  if (x.index >= lie_dim(g)) throw std::invalid_argument("Lie basis index out of range");
  if (g == GroupId::U1) return GroupPoint::u1(t);
  return GroupPoint::su2(su2_basis_exp(x.index, t));
}

Matrix irrep_generator(GroupId g, IrrepLabel label, LieBasisIndex x) {
  validate(g, label);
  if (x.index >= lie_dim(g)) throw std::invalid_argument("Lie basis index out of range");
  if (g == GroupId::U1) return Matrix::Constant(1, 1, kI * static_cast<double>(label.value));
  return -kI * angular_momentum(label.value, x.index);
}

Matrix irrep_matrix(GroupId g, IrrepLabel label, const GroupPoint& point) {
  validate(g, label);
  if (point.group() != g) throw std::invalid_argument("irrep_matrix: point belongs to another group");
  if (g == GroupId::U1) return Matrix::Constant(1, 1, std::polar(1.0, label.value * point.angle()));
  if (label.value == 0) return Matrix::Identity(1, 1);
  // q = exp(theta * n.X) with theta in [0, 2pi]
  const Eigen::Quaterniond& q = point.quaternion();
  const double s = q.vec().norm();
  const double theta = 2.0 * std::atan2(s, q.w());
  Eigen::Vector3d axis = s > 0.0 ? Eigen::Vector3d(q.vec() / s) : Eigen::Vector3d::UnitZ();
  Matrix a = Matrix::Zero(label.value + 1, label.value + 1);
  for (std::size_t k = 0; k < 3; ++k)
    if (axis(static_cast<Eigen::Index>(k)) != 0.0)
      a += (theta * axis(static_cast<Eigen::Index>(k))) * irrep_generator(g, label, {k});
  return expm_antihermitian(a);
}

long casimir_quarters(GroupId g, IrrepLabel label) {
  validate(g, label);
  const long v = label.value;
  return g == GroupId::U1 ? 4 * v * v : v * (v + 2);
}

double casimir_eigenvalue(GroupId g, IrrepLabel label) { return 0.25 * static_cast<double>(casimir_quarters(g, label)); }

HaarScheme haar_scheme(GroupId g, IrrepLabel band) {
  if (band.value < 0) throw std::invalid_argument("haar_scheme: band must be nonnegative");
  HaarScheme scheme{g, band, {}};
  if (g == GroupId::U1) {
    const int n = 2 * band.value + 1;
    for (int k = 0; k < n; ++k) scheme.nodes.push_back({GroupPoint::u1(kTwoPi * k / n), 1.0 / n});
    return scheme;
  }
  // Euler angles q = exp(a X_z) exp(b X_y) exp(c X_z): a in [0,2pi), b in [0,pi], c in [0,4pi);
  // Haar density sin(b) / (16 pi^2). Gauss-Legendre in cos(b), equispaced in a and c.
  const int two_l = band.value;
  const int n_alpha = two_l + 1;
  const int n_beta = two_l + 1;
  const int n_gamma = 2 * two_l + 1;

  std::vector<std::pair<double, double>> beta_rule;  // (cos b, weight) on [-1,1] with weights summing to 1
  for (double z : boost::math::legendre_p_zeros<double>(n_beta)) {
    const double dp = boost::math::legendre_p_prime<double>(n_beta, z);
    const double w = 1.0 / ((1.0 - z * z) * dp * dp);  // Gauss-Legendre weight divided by 2
    if (z == 0.0) {
      beta_rule.emplace_back(0.0, w);
    } else {
      beta_rule.emplace_back(-z, w);
      beta_rule.emplace_back(z, w);
    }
  }

  for (int ia = 0; ia < n_alpha; ++ia) {
    const Eigen::Quaterniond qa = su2_basis_exp(2, kTwoPi * ia / n_alpha);
    for (const auto& [x, wb] : beta_rule) {
      const Eigen::Quaterniond qb = su2_basis_exp(1, std::acos(x));
      for (int ic = 0; ic < n_gamma; ++ic) {
        const Eigen::Quaterniond qc = su2_basis_exp(2, 2.0 * kTwoPi * ic / n_gamma);
        scheme.nodes.push_back({GroupPoint::su2(qa * qb * qc), wb / (n_alpha * n_gamma)});
      }
    }
  }
  return scheme;
}

}  // namespace gaussideal
