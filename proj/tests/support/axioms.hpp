#pragma once

// Randomized checks of the process-theory laws, shared by the unit tests and
// the acceptance run. Each check returns the names of the laws that failed.

#include <random>
#include <string>
#include <vector>

#include "procphi/classical/frobenius.hpp"
#include "procphi/classical/theory.hpp"
#include "procphi/quantum/theory.hpp"

namespace axioms {

constexpr double kTol = 1e-10;

inline procphi::Object random_object(std::mt19937_64& rng, std::size_t max_dim = 4) {
  std::uniform_int_distribution<std::size_t> d(1, max_dim);
  const std::size_t dim = d(rng);
  // Composite objects only when they fit under max_dim.
  if (dim == 4 && rng() % 2 == 0) return procphi::Object::elements(std::vector<std::size_t>{2, 2});
  return procphi::Object::elements(std::vector<std::size_t>{dim});
}

inline procphi::classical::Process random_process(const procphi::Object& a, const procphi::Object& b,
                                                  std::mt19937_64& rng, procphi::classical::Theory*) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> t(a.dim() * b.dim());
  for (auto& x : t) x = u(rng);
  return {a, b, std::move(t)};
}

inline procphi::quantum::Process random_process(const procphi::Object& a, const procphi::Object& b,
                                                std::mt19937_64& rng, procphi::quantum::Theory*) {
  std::normal_distribution<double> g(0.0, 0.5);
  std::vector<procphi::quantum::CMatrix> kraus;
  for (int k = 0; k < 2; ++k) {
    procphi::quantum::CMatrix m(b.dim(), a.dim());
    for (auto& z : m.data()) z = {g(rng), g(rng)};
    kraus.push_back(std::move(m));
  }
  return procphi::quantum::from_kraus(a, b, kraus);
}

template <class T>
typename T::Process random_process(const procphi::Object& a, const procphi::Object& b, std::mt19937_64& rng) {
  return random_process(a, b, rng, static_cast<T*>(nullptr));
}

// Copy and compare maps; quantum uses their diagonal (decohering) embedding.
template <class T>
typename T::Process frobenius_copy(const procphi::Object& a) {
  if constexpr (std::is_same_v<T, procphi::classical::Theory>) return procphi::classical::copy(a, 2);
  else return procphi::quantum::from_classical(procphi::classical::copy(a, 2));
}
template <class T>
typename T::Process frobenius_compare(const procphi::Object& a) {
  if constexpr (std::is_same_v<T, procphi::classical::Theory>) return procphi::classical::compare(a, 2);
  else return procphi::quantum::from_classical(procphi::classical::compare(a, 2));
}

/// One randomized instance of every law.
template <class T>
std::vector<std::string> check_instance(std::mt19937_64& rng) {
  using procphi::Object;
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const char* law) {
    if (!ok) failed.emplace_back(law);
  };
  auto eq = [](const auto& f, const auto& g) {
    return f.dom() == g.dom() && f.cod() == g.cod() && T::approx_equal(f, g, kTol);
  };

  const Object a = random_object(rng), b = random_object(rng), c = random_object(rng), d = random_object(rng);
  const auto f = random_process<T>(a, b, rng);
  const auto g = random_process<T>(b, c, rng);
  const auto h = random_process<T>(c, d, rng);
  const auto k = random_process<T>(d, a, rng);

  // Sequential and parallel composition.
  expect(eq(T::compose(T::compose(f, g), h), T::compose(f, T::compose(g, h))), "compose associativity");
  expect(eq(T::compose(T::identity(a), f), f) && eq(T::compose(f, T::identity(b)), f), "identity");
  // Small extra factors: a triple tensor of 4-dim objects has a 4096-wide Choi matrix.
  const Object s1 = random_object(rng, 2), s2 = random_object(rng, 2);
  const auto e1 = random_process<T>(s1, s2, rng);
  const auto e2 = random_process<T>(s2, s1, rng);
  expect(eq(T::tensor(T::tensor(f, e1), e2), T::tensor(f, T::tensor(e1, e2))), "tensor associativity");
  expect(eq(T::tensor(f, T::identity(Object::unit())), f) && eq(T::tensor(T::identity(Object::unit()), f), f),
         "tensor unit");
  expect(eq(T::compose(T::tensor(f, h), T::tensor(g, k)), T::tensor(T::compose(f, g), T::compose(h, k))),
         "interchange");
  const auto sw1 = procphi::swap<T>(a, c);
  const auto sw2 = procphi::swap<T>(b, d);
  expect(eq(T::compose(T::tensor(f, h), sw2), T::compose(sw1, T::tensor(h, f))), "swap naturality");
  expect(eq(T::compose(sw1, procphi::swap<T>(c, a)), T::identity(a.tensor(c))), "swap involution");

  // Discarding and the completely mixed state.
  expect(eq(T::discard(a.tensor(b)), T::tensor(T::discard(a), T::discard(b))), "discard of a tensor");
  expect(eq(T::mixed(a.tensor(b)), T::tensor(T::mixed(a), T::mixed(b))), "mixed of a tensor");
  expect(std::abs(T::mass(T::mixed(a)) - 1.0) < kTol &&
             eq(T::compose(T::mixed(a), T::discard(a)), T::identity(Object::unit())),
         "discard after mixed");
  expect(eq(T::discard(Object::unit()), T::identity(Object::unit())) &&
             eq(T::mixed(Object::unit()), T::identity(Object::unit())),
         "discard of the unit");

  // Dagger.
  expect(eq(T::dagger(T::dagger(f)), f), "dagger involution");
  expect(eq(T::dagger(T::compose(f, g)), T::compose(T::dagger(g), T::dagger(f))), "dagger reverses composition");
  expect(eq(T::dagger(T::tensor(f, h)), T::tensor(T::dagger(f), T::dagger(h))), "dagger of a tensor");
  expect(eq(T::dagger(T::identity(a)), T::identity(a)), "dagger of identity");

  // Frobenius laws of copy/compare on a.
  const auto delta = frobenius_copy<T>(a);
  const auto mu = frobenius_compare<T>(a);
  const auto id = T::identity(a);
  const auto lhs = T::compose(T::tensor(id, delta), T::tensor(mu, id));
  const auto mid = T::compose(mu, delta);
  const auto rhs = T::compose(T::tensor(delta, id), T::tensor(id, mu));
  expect(eq(lhs, mid) && eq(mid, rhs), "Frobenius law");
  expect(eq(T::compose(T::tensor(mu, id), mu), T::compose(T::tensor(id, mu), mu)), "compare associativity");
  expect(eq(T::compose(delta, T::tensor(delta, id)), T::compose(delta, T::tensor(id, delta))), "copy coassociativity");
  expect(eq(T::compose(delta, procphi::swap<T>(a, a)), delta), "copy commutativity");
  // Counit: discarding one copy leaves id (classically) or the decoherence map.
  const auto counit = T::compose(delta, T::tensor(T::discard(a), id));
  if constexpr (std::is_same_v<T, procphi::classical::Theory>) {
    expect(eq(counit, id), "copy counit");
    expect(eq(T::compose(delta, mu), id), "specialness");
  } else {
    expect(eq(counit, procphi::quantum::from_classical(procphi::classical::identity(a))), "copy counit");
  }
  return failed;
}

}  // namespace axioms
