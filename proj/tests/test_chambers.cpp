#include <gtest/gtest.h>

#include <random>

#include "hkcones/error.hpp"
#include "support.hpp"

using namespace hktest;

namespace {

using Labels = std::vector<std::string>;

Labels sorted(Labels v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(BZChamber, Examples) {
  const HKModel s1 = builtin("hilb2-s1");
  const BZChamber a = bz_chamber(s1, cls({"1", "1"}));
  EXPECT_EQ(a.neg_set, Labels{"E"});
  EXPECT_EQ(a.null_set, Labels{"E"});
  EXPECT_TRUE(a.stable_codim1);
  const BZChamber b = bz_chamber(s1, cls({"1", "0"}));
  EXPECT_TRUE(b.neg_set.empty());
  EXPECT_EQ(b.null_set, Labels{"E"});
  EXPECT_FALSE(b.stable_codim1);
  const BZChamber c = bz_chamber(s1, s1.ample);
  EXPECT_TRUE(c.neg_set.empty() && c.null_set.empty() && c.stable_codim1);
  EXPECT_THROW(bz_chamber(s1, cls({"0", "1"})), Error);
}

TEST(StabilityChambers, Hilb2S1) {
  const auto chambers = stability_chambers_rank2(builtin("hilb2-s1"));
  ASSERT_EQ(chambers.size(), 3U);
  EXPECT_EQ(chambers[0].name, "Amp");
  EXPECT_TRUE(chambers[0].components.empty());
  std::map<Labels, LocusComponent> by_label;
  for (const auto& c : chambers) {
    if (!c.components.empty()) by_label[c.labels()] = c.components.front();
  }
  EXPECT_EQ(by_label.at({"E"}), (LocusComponent{"E", 3, true}));
  EXPECT_EQ(by_label.at({"P²"}), (LocusComponent{"P²", 2, false}));
  for (const auto& c : chambers) {
    if (c.labels() == Labels{"P²"}) {
      ASSERT_EQ(c.pieces.size(), 1U);
      EXPECT_TRUE(c.contains(cls({"3", "-2"})));
      EXPECT_TRUE(c.contains(cls({"4", "-3"})));
      EXPECT_FALSE(c.contains(cls({"1", "-1"})));
    }
    if (c.labels() == Labels{"E"}) EXPECT_TRUE(c.contains(cls({"1", "0"})));
  }
}

TEST(StabilityChambers, HilbertSchemesComponents) {
  const std::map<std::string, std::set<Labels>> expected = {
      {"hilb2-s1", {{}, {"E"}, {"P²"}}}, {"hilb2-s2", {{}, {"E"}, {"ι(E)"}}}, {"hilb2-s3", {{}, {"E"}, {"D"}}}};
  for (const auto& [name, sets] : expected) {
    const auto chambers = stability_chambers_rank2(builtin(name));
    std::set<Labels> got;
    for (const auto& c : chambers) got.insert(c.labels());
    EXPECT_EQ(chambers.size(), 3U) << name;
    EXPECT_EQ(got, sets) << name;
  }
  // the third chamber of hilb2-s2 sits on <2H-3δ, 3H-4δ>
  for (const auto& c : stability_chambers_rank2(builtin("hilb2-s2"))) {
    if (c.labels() != Labels{"ι(E)"}) continue;
    ASSERT_EQ(c.pieces.size(), 1U);
    EXPECT_EQ(c.pieces[0].lo.direction(), cls({"2", "-3"}));
    EXPECT_EQ(c.pieces[0].hi.direction(), cls({"3", "-4"}));
    EXPECT_FALSE(c.pieces[0].include_lo);
    EXPECT_TRUE(c.pieces[0].include_hi);
  }
}

TEST(StabilityChambers, HTSixChambers) {
  const HKModel ht = builtin("fano-cubic-scroll");
  const auto chambers = stability_chambers_rank2(ht);
  ASSERT_EQ(chambers.size(), 6U);
  std::set<Labels> got;
  for (const auto& c : chambers) got.insert(c.labels());
  const std::set<Labels> expected = {{}, {"P"}, {"P∨"}, {"P", "S"}, {"P∨", "S"}, {"P", "P∨", "S"}};
  EXPECT_EQ(got, expected);
  for (const auto& c : chambers) {
    EXPECT_EQ(c.pieces.size(), c.labels().size() == 3 ? 2U : 1U) << c.name;
    for (const auto& comp : c.components) {
      EXPECT_EQ(comp.dim, 2);
      EXPECT_FALSE(comp.divisorial);
    }
  }
  // α1 joins SC{P}, α1∨ joins SC{P∨}
  for (const auto& c : chambers) {
    if (c.labels() == Labels{"P"}) EXPECT_TRUE(c.contains(cls({"7", "-3"})));
    if (c.labels() == Labels{"P∨"}) EXPECT_TRUE(c.contains(cls({"1", "3"})));
    if (c.labels().empty()) {
      EXPECT_FALSE(c.contains(cls({"7", "-3"})));
      EXPECT_TRUE(c.contains(cls({"1", "0"})));
    }
  }
}

TEST(StabilityChambers, NonConvexityWitness) {
  const HKModel ht = builtin("fano-cubic-scroll");
  const DivisorClass g1 = cls({"20", "-11"});
  const DivisorClass g2 = cls({"-2", "11"});
  const Labels all = {"P", "P∨", "S"};
  EXPECT_EQ(labels_of(base_loci(ht, g1).b_plus), all);
  EXPECT_EQ(labels_of(base_loci(ht, g2).b_plus), all);
  EXPECT_EQ(g1 + g2, cls({"18", "0"}));
  EXPECT_TRUE(membership(ht, g1 + g2).ample);
  EXPECT_TRUE(base_loci(ht, g1 + g2).b_plus.empty());
  for (const auto& c : stability_chambers_rank2(ht)) {
    if (c.labels() == all) {
      EXPECT_TRUE(c.contains(g1));
      EXPECT_TRUE(c.contains(g2));
      EXPECT_FALSE(c.contains(g1 + g2));
    }
  }
}

TEST(StabilityChambers, Partition) {
  std::mt19937_64 rng(53);
  for (const auto& n : {"hilb2-s1", "hilb2-s2", "hilb2-s3", "fano-cubic-scroll", "k3-two-curves"}) {
    const HKModel m = builtin(n);
    const auto chambers = stability_chambers_rank2(m);
    for (const auto& d : random_big_classes(m, rng, 200)) {
      int hits = 0;
      const StabilityChamber* home = nullptr;
      for (const auto& c : chambers) {
        if (c.contains(d)) {
          ++hits;
          home = &c;
        }
      }
      ASSERT_EQ(hits, 1) << n << " " << d.to_string();
      EXPECT_EQ(home->labels(), labels_of(base_loci(m, d).b_plus)) << n << " " << d.to_string();
    }
  }
}

TEST(StabilityChambers, TruncationWithoutStabilization) {
  HKModel ht = builtin("fano-cubic-scroll");
  ht.fan_stabilized = false;
  try {
    stability_chambers_rank2(ht);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationExceeded);
  }
  EXPECT_NO_THROW(stability_chambers_rank2(builtin("hilb2-s1")));
  EXPECT_THROW(stability_chambers_rank2(builtin("k3n-mixed")), Error);
}

TEST(MoriChamber, Examples) {
  const HKModel s1 = builtin("hilb2-s1");
  const MoriChamber a = mori_chamber(s1, cls({"1", "1"}));
  ASSERT_EQ(a.face_rays.size(), 1U);
  EXPECT_EQ(a.face_rays[0].direction(), cls({"1", "0"}));
  EXPECT_EQ(a.exceptional_generators, Labels{"E"});
  EXPECT_EQ(a.cone, Cone2D::spanned_by(cls({"1", "0"}), cls({"0", "1"})));

  const MoriChamber b = mori_chamber(s1, s1.ample);
  EXPECT_TRUE(b.exceptional_generators.empty());
  EXPECT_EQ(b.cone, nef_cone_rank2(s1));

  const HKModel ht = builtin("fano-cubic-scroll");
  const MoriChamber c = mori_chamber(ht, cls({"4", "-2"}));
  EXPECT_TRUE(c.exceptional_generators.empty());
  EXPECT_EQ(c.cone, Cone2D::spanned_by(cls({"7", "-3"}), cls({"17", "-9"})));

  EXPECT_THROW(mori_chamber(s1, cls({"-1", "0"})), Error);
  try {
    mori_chamber(ht, cls({"20", "-11"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationExceeded);
  }
}

TEST(MoriChamber, NegConstantOnInterior) {
  std::mt19937_64 rng(59);
  for (const auto& n : {"hilb2-s1", "hilb2-s2", "hilb2-s3", "k3-two-curves", "fano-cubic-scroll"}) {
    const HKModel m = builtin(n);
    for (const auto& d : random_big_classes(m, rng, 60)) {
      MoriChamber mc = [&] {
        try {
          return mori_chamber(m, d);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::TruncationExceeded);
          return MoriChamber{{}, {}, Cone2D::spanned_by(cls({"1", "0"}), cls({"0", "1"}))};
        }
      }();
      if (mc.face_rays.empty()) continue;
      const Labels neg = decompose(m, d).support();
      // sample the interior of the Mori chamber
      for (int i = 1; i < 8; ++i) {
        const DivisorClass x = Scalar(i) * mc.cone.lo.direction() + Scalar(8 - i) * mc.cone.hi.direction();
        EXPECT_EQ(decompose(m, x).support(), neg) << n << " " << x.to_string();
      }
    }
  }
}

TEST(Destab, HTExample) {
  const HKModel ht = builtin("fano-cubic-scroll");
  const DestabReport r = destabilizing_numbers(ht, cls({"4", "-2"}), cls({"1", "0"}));
  ASSERT_EQ(r.jumps.size(), 2U);
  EXPECT_EQ(r.jumps[0].lambda, S("2/9"));
  EXPECT_EQ(r.jumps[1].lambda, S("14/39"));
  EXPECT_TRUE(r.jumps[0].rational && r.jumps[1].rational);
  EXPECT_EQ(sorted(labels_of(r.jumps[0].before)), Labels{"P"});
  EXPECT_EQ(sorted(labels_of(r.jumps[0].after)), (Labels{"P", "S"}));
  EXPECT_EQ(sorted(labels_of(r.jumps[1].after)), (Labels{"P", "P∨", "S"}));
  ASSERT_TRUE(r.boundary_lambda);
  EXPECT_EQ(*r.boundary_lambda, S("2-2/3*sqrt(6)"));
  EXPECT_FALSE(r.boundary_lambda->is_rational());
  // oracle: -2/(4 - λ) equals the slopes of α2, α3
  EXPECT_EQ(S("-2") / (S("4") - S("2/9")), S("-9/17"));
  EXPECT_EQ(S("-2") / (S("4") - S("14/39")), S("-39/71"));
}

TEST(Destab, Hilb2S1Example) {
  const HKModel s1 = builtin("hilb2-s1");
  const DestabReport r = destabilizing_numbers(s1, cls({"1", "0"}), cls({"4", "-1"}));
  ASSERT_EQ(r.jumps.size(), 1U);
  EXPECT_EQ(r.jumps[0].lambda, Scalar(0));
  EXPECT_TRUE(r.jumps[0].before.empty());
  EXPECT_EQ(labels_of(r.jumps[0].after), Labels{"E"});
  EXPECT_EQ(*r.boundary_lambda, S("1/4"));
}

TEST(Destab, AlongAmpleRay) {
  for (const auto& n : {"hilb2-s1", "fano-cubic-scroll", "k3-two-curves"}) {
    const HKModel m = builtin(n);
    const DestabReport r = destabilizing_numbers(m, m.ample, m.ample);
    EXPECT_TRUE(r.jumps.empty()) << n;
    EXPECT_EQ(*r.boundary_lambda, Scalar(1)) << n;
  }
}

TEST(Destab, Errors) {
  const HKModel s1 = builtin("hilb2-s1");
  EXPECT_THROW(destabilizing_numbers(s1, cls({"1", "0"}), cls({"1", "0"})), Error);  // H is not ample
  EXPECT_THROW(destabilizing_numbers(s1, cls({"0", "1"}), s1.ample), Error);         // δ is not big
  EXPECT_THROW(destabilizing_numbers(builtin("k3n-mixed"), cls({"1", "0", "0"}), cls({"4", "-1", "-1"})), Error);
}

TEST(Destab, RationalWhileBig) {
  std::mt19937_64 rng(61);
  for (const auto& n : {"hilb2-s1", "hilb2-s2", "hilb2-s3", "fano-cubic-scroll", "k3-two-curves"}) {
    const HKModel m = builtin(n);
    for (const auto& d : random_big_classes(m, rng, 40)) {
      if (!d.is_rational()) continue;
      const DestabReport r = destabilizing_numbers(m, d, m.ample);
      for (const auto& j : r.jumps) {
        EXPECT_TRUE(j.rational) << n << " " << d.to_string();
        EXPECT_GE(j.lambda.sign(), 0);
        EXPECT_LT(j.lambda, *r.boundary_lambda);
      }
    }
  }
}
