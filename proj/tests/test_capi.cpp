#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "dragon/dragon.h"

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STRNE(dragon_version(), "");
  EXPECT_STREQ(dragon_status_string(DRAGON_OK), "ok");
  EXPECT_STREQ(dragon_status_string(DRAGON_ERR_NO_SIGN_CHANGE), "no sign change");
}

TEST(CApi, ParamsAndErrors) {
  dragon_params p;
  ASSERT_EQ(dragon_params_from_alpha(108.0, &p), DRAGON_OK);
  EXPECT_NEAR(p.q, 0.6180340, 5e-8);
  EXPECT_STREQ(dragon_last_error(), "");
  EXPECT_TRUE(dragon_params_in_hull_window(&p));
  EXPECT_EQ(dragon_params_from_alpha(190.0, &p), DRAGON_ERR_DOMAIN);
  EXPECT_STRNE(dragon_last_error(), "");
  EXPECT_EQ(dragon_params_from_q(0.4, &p), DRAGON_ERR_DOMAIN);
  EXPECT_EQ(dragon_params_from_alpha(100.0, nullptr), DRAGON_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(dragon_params_from_q(0.7071067811865476, &p), DRAGON_OK);
  EXPECT_NEAR(p.alpha_deg, 90.0, 1e-6);
}

TEST(CApi, Sigma) {
  char c = 0;
  ASSERT_EQ(dragon_sigma(3, &c), DRAGON_OK);
  EXPECT_EQ(c, 'R');
  ASSERT_EQ(dragon_sigma(4, &c), DRAGON_OK);
  EXPECT_EQ(c, 'L');
}

TEST(CApi, PolygonLifecycle) {
  dragon_polygon* poly = nullptr;
  ASSERT_EQ(dragon_polygon_create(100.0, 5, DRAGON_GENERATE_INFLATION, &poly), DRAGON_OK);
  ASSERT_NE(poly, nullptr);
  EXPECT_EQ(dragon_polygon_level(poly), 5);
  ASSERT_EQ(dragon_polygon_vertex_count(poly), 33u);
  const dragon_point* v = dragon_polygon_vertices(poly);
  EXPECT_EQ(v[0].x, 0.0);
  EXPECT_NEAR(v[32].x, 1.0, 1e-12);
  dragon_params p;
  dragon_params_from_alpha(100.0, &p);
  EXPECT_NEAR(dragon_polygon_edge_length(poly), std::pow(p.q, 5), 1e-15);
  dragon_polygon_destroy(poly);
  dragon_polygon_destroy(nullptr);

  poly = reinterpret_cast<dragon_polygon*>(0x1);
  EXPECT_EQ(dragon_polygon_create(100.0, 30, DRAGON_GENERATE_RECURSIVE, &poly), DRAGON_ERR_RESOURCE);
  EXPECT_EQ(poly, nullptr);
  EXPECT_EQ(dragon_polygon_create(100.0, 3, static_cast<dragon_generation>(9), &poly),
            DRAGON_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Hulls) {
  dragon_hull* base = nullptr;
  ASSERT_EQ(dragon_hull_create(100.0, &base), DRAGON_OK);
  EXPECT_FALSE(dragon_hull_outside_window(base));
  double margin = -1;
  int inside = 0;
  ASSERT_EQ(dragon_hull_membership(base, {0.5, -0.3}, 1e-9, &margin, &inside), DRAGON_OK);
  dragon_hull* img = nullptr;
  ASSERT_EQ(dragon_hull_image(base, DRAGON_PI1, &img), DRAGON_OK);
  dragon_path* path = nullptr;
  ASSERT_EQ(dragon_hull_boundary(img, 360, 1e-12, &path), DRAGON_OK);
  ASSERT_GT(dragon_path_size(path), 100u);
  const dragon_point* pts = dragon_path_data(path);
  for (std::size_t i = 0; i < dragon_path_size(path); i += 17) {
    ASSERT_EQ(dragon_hull_membership(base, pts[i], 1e-9, &margin, &inside), DRAGON_OK);
    EXPECT_TRUE(inside);
  }
  dragon_path_destroy(path);
  EXPECT_EQ(dragon_hull_boundary(img, 4, 1e-12, &path), DRAGON_ERR_DOMAIN);
  dragon_hull_destroy(img);
  dragon_hull_destroy(base);

  ASSERT_EQ(dragon_hull_create(120.0, &base), DRAGON_OK);
  EXPECT_TRUE(dragon_hull_outside_window(base));
  dragon_hull_destroy(base);
}

TEST(CApi, Conditions) {
  ASSERT_GE(dragon_condition_count(), 14u);
  bool found = false;
  for (std::size_t i = 0; i < dragon_condition_count(); ++i) {
    dragon_condition_info info;
    ASSERT_EQ(dragon_condition_get(i, &info), DRAGON_OK);
    if (std::strcmp(info.id, "P3-main") == 0) {
      found = true;
      ASSERT_TRUE(info.has_bracket);
      dragon_threshold t;
      ASSERT_EQ(dragon_find_threshold(info.id, info.bracket_lo, info.bracket_hi, 1e-6, &t),
                DRAGON_OK);
      EXPECT_GE(t.critical_q, 0.6615289);
      EXPECT_LE(t.critical_q, 0.6615339);
    }
  }
  EXPECT_TRUE(found);
  dragon_condition_info info;
  EXPECT_EQ(dragon_condition_get(dragon_condition_count(), &info), DRAGON_ERR_NOT_FOUND);
  double r;
  EXPECT_EQ(dragon_condition_evaluate("missing", 100.0, &r), DRAGON_ERR_NOT_FOUND);
  ASSERT_EQ(dragon_condition_evaluate("L11", 96.241, &r), DRAGON_OK);
  EXPECT_GT(r, 0.0);
  dragon_threshold t;
  EXPECT_EQ(dragon_find_threshold("P3-main", 100.0, 108.0, 1e-6, &t), DRAGON_ERR_NO_SIGN_CHANGE);
}

TEST(CApi, Verification) {
  dragon_verification v;
  ASSERT_EQ(dragon_verify_separation(97.0, 720, 1e-10, 1e-9, 1e-6, &v), DRAGON_OK);
  EXPECT_FALSE(v.pass);
  ASSERT_EQ(dragon_verify_separation(103.0, 720, 1e-10, 1e-9, 1e-6, &v), DRAGON_OK);
  EXPECT_TRUE(v.pass);
  ASSERT_EQ(dragon_verify_hull_invariance(100.0, 720, 1e-10, 1e-9, &v), DRAGON_OK);
  EXPECT_TRUE(v.pass);
  ASSERT_EQ(dragon_verify_containment(100.0, 10, 9, 0, 1e-9, &v), DRAGON_OK);
  EXPECT_TRUE(v.pass);
  ASSERT_EQ(dragon_verify_containment(100.0, 10, 9, 1, 1e-9, &v), DRAGON_OK);
  EXPECT_FALSE(v.pass);
}

TEST(CApi, GapTable) {
  std::vector<dragon_lemma11_row> rows(11);
  ASSERT_EQ(dragon_lemma11_table(nullptr, 11, rows.data()), DRAGON_OK);
  EXPECT_NEAR(rows[6].rhs, 0.3237625, 5e-8);
  EXPECT_TRUE(rows[6].satisfied);
  EXPECT_FALSE(rows[5].satisfied);
  EXPECT_EQ(dragon_lemma11_table(nullptr, 3, rows.data()), DRAGON_ERR_INVALID_ARGUMENT);
  const double alphas[2] = {96.0, 97.0};
  ASSERT_EQ(dragon_lemma11_table(alphas, 2, rows.data()), DRAGON_OK);
  EXPECT_FALSE(rows[0].satisfied);
  EXPECT_TRUE(rows[1].satisfied);
  dragon_lemma11_geometry g;
  ASSERT_EQ(dragon_lemma11_geometry_get(96.241, &g), DRAGON_OK);
  EXPECT_TRUE(g.consistent);
}

TEST(CApi, Contacts) {
  dragon_polygon* poly = nullptr;
  ASSERT_EQ(dragon_polygon_create(93.0, 10, DRAGON_GENERATE_RECURSIVE, &poly), DRAGON_OK);
  dragon_contacts* rep = nullptr;
  ASSERT_EQ(dragon_find_contacts(poly, 1e-9, 0, 1000, &rep), DRAGON_OK);
  EXPECT_GE(dragon_contacts_count(rep, DRAGON_PROPER_CROSSING), 1u);
  EXPECT_FALSE(dragon_contacts_truncated(rep));
  EXPECT_GE(dragon_contacts_wall_time(rep), 0.0);
  std::size_t proper = 0;
  for (std::size_t i = 0; i < dragon_contacts_event_count(rep); ++i) {
    dragon_contact_event e;
    ASSERT_EQ(dragon_contacts_event(rep, i, &e), DRAGON_OK);
    EXPECT_GT(e.seg_j, e.seg_i + 1);
    if (e.kind == DRAGON_PROPER_CROSSING) ++proper;
  }
  EXPECT_EQ(proper, dragon_contacts_count(rep, DRAGON_PROPER_CROSSING));
  dragon_contact_event e;
  EXPECT_EQ(dragon_contacts_event(rep, 1u << 30, &e), DRAGON_ERR_NOT_FOUND);
  EXPECT_STREQ(dragon_contact_kind_string(DRAGON_VERTEX_COINCIDENCE), "vertex_coincidence");
  dragon_contacts_destroy(rep);
  dragon_polygon_destroy(poly);

  double lo = 0, hi = 0;
  ASSERT_EQ(dragon_empirical_critical_angle(10, 93.0, 97.0, 0.01, &lo, &hi), DRAGON_OK);
  EXPECT_LE(lo, 95.126);
  EXPECT_GE(hi, 95.126);
  EXPECT_EQ(dragon_empirical_critical_angle(10, 100.0, 104.0, 0.01, &lo, &hi),
            DRAGON_ERR_PRECONDITION);
}

TEST(CApi, NoCrossingChecks) {
  dragon_theorem1_report r;
  ASSERT_EQ(dragon_theorem1_checks(10, 100.0, 720, &r), DRAGON_OK);
  EXPECT_TRUE(r.pass);
  EXPECT_STREQ(r.checks[2].name, "q - q^n > q^n");
  EXPECT_EQ(dragon_theorem1_checks(2, 100.0, 720, &r), DRAGON_ERR_DOMAIN);
}
