#include <gtest/gtest.h>

#include "lemmas.hpp"
#include "procphi/classical/theory.hpp"
#include "procphi/errors.hpp"
#include "procphi/quantum/theory.hpp"

using namespace procphi;

namespace {

TEST(Decomposition, AppendixLemmasClassical) {
  for (const auto& s : lemmas::objects())
    for (const auto& f : lemmas::check<classical::Theory>(s)) ADD_FAILURE() << f;
}

TEST(Decomposition, AppendixLemmasQuantum) {
  for (const auto& s : lemmas::objects())
    for (const auto& f : lemmas::check<quantum::Theory>(s)) ADD_FAILURE() << f;
}

TEST(Decomposition, Basics) {
  const auto s = Object::elements(std::vector<std::size_t>{2, 3, 2});
  const Decomposition d(s, ElementSet(0b011));
  EXPECT_EQ(d.right(), ElementSet(0b100));
  EXPECT_EQ(d.left_object().dim(), 6u);
  EXPECT_FALSE(d.is_top() || d.is_bottom());
  EXPECT_TRUE(Decomposition::top(s).is_top());
  EXPECT_TRUE(equivalent(d, Decomposition(s, ElementSet(0b011))));
  EXPECT_FALSE(preceq(Decomposition(s, ElementSet(0b100)), d));
  EXPECT_TRUE(preceq(Decomposition(s, ElementSet(0b010)), d));
}

TEST(Decomposition, IsoIsCausalAndCocausal) {
  const auto s = Object::elements(std::vector<std::size_t>{2, 3, 2});
  for (const auto& d : DecompositionSet::from_elements(s).members()) {
    const auto iso = d.iso<classical::Theory>();
    EXPECT_TRUE(classical::is_causal(iso) && classical::is_cocausal(iso));
    EXPECT_EQ(iso.cod(), d.left_object().tensor(d.right_object()));
  }
}

TEST(Decomposition, Errors) {
  const auto s = Object::elements(std::vector<std::size_t>{2, 2});
  const auto t = Object::elements(std::vector<std::size_t>{3});
  EXPECT_THROW(preceq(Decomposition::top(s), Decomposition::top(t)), DomainError);
  const auto set = DecompositionSet::from_elements(s);
  EXPECT_THROW(restrict(set, Decomposition::top(t)), DomainError);
  EXPECT_EQ(set.members().front(), Decomposition::bottom(s));
  EXPECT_EQ(set.members().back(), Decomposition::top(s));
}

}  // namespace
