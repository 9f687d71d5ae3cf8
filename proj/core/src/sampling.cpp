#include "sgholder/sampling.hpp"

#include "sgholder/errors.hpp"
#include "sgholder/rng.hpp"

namespace sgholder {

Function random_test_function(const SemigroupModel& m, std::uint64_t seed, std::uint64_t index, int bandwidth) {
  RandomStream rng(seed, index);
  Function c = Function::Zero(static_cast<Eigen::Index>(m.size()));
  if (m.kind() == ModelKind::FiniteChain) {
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      const Complex z = rng.complex_normal();
      if (!m.is_kernel(k)) c(k) = z;
    }
  } else {
    const auto& lat = dynamic_cast<const LatticeModel&>(m);
    const int radius = bandwidth > 0 ? bandwidth : lat.bandwidth();
    for (const auto& k : lat.band(radius)) {
      const Complex z = rng.complex_normal();
      const Eigen::Index idx = lat.index_of(k);
      if (!m.is_kernel(idx)) c(idx) = z;
    }
  }
  Function f = m.synthesize(c);
  const double s = m.sup_norm(f);
  if (!(s > 0.0)) throw DomainError("model has no nonconstant test functions");
  return f / s;
}

std::vector<Function> random_test_functions(const SemigroupModel& m, std::uint64_t seed, std::size_t count,
                                            int bandwidth) {
  std::vector<Function> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_test_function(m, seed, i, bandwidth));
  return out;
}

}  // namespace sgholder
