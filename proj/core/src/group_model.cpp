#include "modpll/group_model.hpp"

namespace modpll {

namespace {
bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}
}  // namespace

AbelianGroupModel::AbelianGroupModel(std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw Error(ErrorKind::InvalidInput, "group model needs at least one generator");
  }
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name.empty()) {
      throw Error(ErrorKind::InvalidInput, "generator name must be nonempty");
    }
    for (size_t j = 0; j < i; ++j) {
      if (generators_[j].name == generators_[i].name) {
        throw Error(ErrorKind::InvalidInput, "duplicate generator name " + generators_[i].name);
      }
    }
  }
}

AbelianGroupModel AbelianGroupModel::standard_model(long p, long ell, int f) {
  if (!is_prime(ell)) {
    throw Error(ErrorKind::InvalidInput, "ell must be prime, got " + std::to_string(ell));
  }
  if (ell == p) {
    throw Error(ErrorKind::InvalidInput, "ell must differ from p");
  }
  if (f < 1 || f > 62) {
    throw Error(ErrorKind::InvalidInput, "f must be >= 1");
  }
  std::uint64_t q = 1;
  for (int i = 0; i < f; ++i) {
    if (q > (1ULL << 62) / static_cast<std::uint64_t>(ell)) {
      throw Error(ErrorKind::InvalidInput, "q = ell^f overflows");
    }
    q *= static_cast<std::uint64_t>(ell);
  }
  AbelianGroupModel m({Generator{"u", 0}, Generator{"t", q - 1}});
  m.standard_ = true;
  m.ell_ = ell;
  m.f_ = f;
  m.q_ = q;
  return m;
}

int AbelianGroupModel::index_of(const std::string& name) const {
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

bool AbelianGroupModel::operator==(const AbelianGroupModel& other) const {
  if (generators_.size() != other.generators_.size()) return false;
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name != other.generators_[i].name ||
        generators_[i].order != other.generators_[i].order) {
      return false;
    }
  }
  return true;
}

int hom_space_dim(const AbelianGroupModel& group, long p) {
  int dim = 0;
  for (const Generator& g : group.generators()) {
    if (g.order == 0 || g.order % static_cast<std::uint64_t>(p) == 0) ++dim;
  }
  return dim;
}

}  // namespace modpll
