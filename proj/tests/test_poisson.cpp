#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsphere/poisson.hpp"

using namespace qsphere;

namespace {

Mat4 half(const Mat4& m) { return mat_scale(m, GaussQ(Rational(1, 2))); }

PoissonPoly pp_as() {  // a* = z1* z4 - z2* z3
    return pp_zs(1) * pp_z(4) - pp_zs(2) * pp_z(3);
}
PoissonPoly pp_bs() {  // b* = z1* z3* + z2* z4*
    return pp_zs(1) * pp_zs(3) + pp_zs(2) * pp_zs(4);
}

bool eq_mod_sphere(const PoissonPoly& x, const PoissonPoly& y) {
    return reduce_sphere(x - y).is_zero();
}

}  // namespace

TEST_CASE("u(4) generators and bracket-generated structure") {
    for (int i = 1; i <= 3; ++i) {
        CHECK(is_antihermitian(u4::H(i)));
        CHECK(is_antihermitian(u4::E(i)));
        CHECK(is_antihermitian(u4::F(i)));
    }
    CHECK(is_antihermitian(u4::Hc()));
    CHECK(is_antihermitian(u4::h()));

    // sl(2) triple inside each rank-1 slice: [E_i, F_i] = 1/2 H_i,
    // [H_i, E_i] = 2 F_i, [H_i, F_i] = -2 E_i.
    for (int i = 1; i <= 3; ++i) {
        CHECK(lie_bracket(u4::E(i), u4::F(i)) == half(u4::H(i)));
        CHECK(lie_bracket(u4::H(i), u4::E(i)) == mat_scale(u4::F(i), GaussQ(2)));
        CHECK(lie_bracket(u4::H(i), u4::F(i)) == mat_scale(u4::E(i), GaussQ(-2)));
    }

    // H is central and the ten generators bracket-generate all of u(4).
    std::vector<Mat4> gens;
    for (int i = 1; i <= 3; ++i) gens.push_back(u4::H(i));
    for (int i = 1; i <= 3; ++i) gens.push_back(u4::E(i));
    for (int i = 1; i <= 3; ++i) gens.push_back(u4::F(i));
    gens.push_back(u4::Hc());
    for (const Mat4& x : gens) CHECK(lie_bracket(u4::Hc(), x) == Mat4{});
    CHECK(bracket_closure(gens).size() == 16);
}

TEST_CASE("cobracket: generator values and the cocycle identity") {
    CHECK(delta(u4::H(1)).empty());
    CHECK(delta(u4::H(2)).empty());
    CHECK(delta(u4::H(3)).empty());
    CHECK(delta(u4::Hc()).empty());

    // delta(E_1) = E_1 ^ H_1 in internal coordinates (H_1 = index 0,
    // E_1 = index 3), canonically -(e_0 ^ e_3).
    Wedge dE1 = delta(u4::E(1));
    REQUIRE(dE1.size() == 1);
    CHECK(dE1.at({0, 3}) == Rational(-1));
    Wedge dF1 = delta(u4::F(1));
    REQUIRE(dF1.size() == 1);
    CHECK(dF1.at({0, 6}) == Rational(-1));

    // delta is linear and a 1-cocycle on every basis pair.
    CHECK(check_cocycle());

    Mat4 bad{};
    bad[1] = GaussQ(1);  // e_12 alone is not antihermitian
    CHECK_THROWS_AS(delta(bad), NotInSpan);
}

TEST_CASE("coisotropic and Poisson-Lie subalgebras") {
    std::vector<Mat4> su2d = {mat_add(u4::H(1), u4::H(3)), mat_add(u4::E(1), u4::E(3)),
                              mat_add(u4::F(1), u4::F(3))};
    CHECK_FALSE(is_coisotropic(su2d));

    std::vector<Mat4> su2d_g;
    for (const Mat4& x : su2d) su2d_g.push_back(u4::adg(x));
    CHECK(is_coisotropic(su2d_g));

    std::vector<Mat4> u3 = bracket_closure({u4::h(), u4::H(1), u4::H(2), u4::E(1), u4::E(2),
                                            u4::F(1), u4::F(2)});
    CHECK(u3.size() == 9);
    CHECK(is_poisson_lie(u3));
    CHECK(is_coisotropic(u3));

    CHECK_THROWS_AS(is_coisotropic({u4::E(1), u4::F(2)}), NotASubalgebra);
}

TEST_CASE("generator brackets, antisymmetry, Leibniz") {
    CHECK(pbracket(pp_z(1), pp_z(2)) == -(pp_z(1) * pp_z(2)));
    CHECK(pbracket(pp_z(1), pp_zs(3)) == pp_z(1) * pp_zs(3));
    CHECK(pbracket(pp_zs(2), pp_zs(4)) == pp_zs(2) * pp_zs(4));
    CHECK(pbracket(pp_z(1), pp_zs(1)).is_zero());
    CHECK(pbracket(pp_z(3), pp_zs(3)) == pp_R() * Rational(-2));
    CHECK(pbracket(pp_zs(3), pp_z(3)) == pp_R() * Rational(2));

    PoissonPoly f = pp_a(), g = pp_b(), h = pp_R();
    CHECK(pbracket(f, g) == -pbracket(g, f));
    CHECK(pbracket(f * g, h) == f * pbracket(g, h) + g * pbracket(f, h));
}

TEST_CASE("derived bracket table on a, b, R") {
    CHECK(eq_mod_sphere(pbracket(pp_a(), pp_R()), pp_a() * pp_R() * Rational(-2)));
    CHECK(eq_mod_sphere(pbracket(pp_b(), pp_R()), pp_b() * pp_R() * Rational(2)));
    CHECK(eq_mod_sphere(pbracket(pp_a(), pp_b()), pp_a() * pp_b() * Rational(-3)));
    CHECK(eq_mod_sphere(pbracket(pp_a(), pp_bs()), pp_a() * pp_bs()));
    CHECK(eq_mod_sphere(pbracket(pp_a(), pp_as()),
                        pp_a() * pp_as() * Rational(-2) + pp_R() * pp_R() * Rational(2)));
    CHECK(eq_mod_sphere(pbracket(pp_b(), pp_bs()),
                        pp_b() * pp_bs() * Rational(4) - pp_R() * Rational(2)));
}

TEST_CASE("stereographic brackets match the diagonal form") {
    PFrac z1{pp_a(), 1}, z2{pp_b(), 1};
    PFrac z1s{pp_as(), 1}, z2s{pp_bs(), 1};
    auto times = [](const PFrac& x, const PFrac& y) { return PFrac{x.num * y.num, x.k + y.k}; };
    PFrac one{PoissonPoly::scalar(1), 0};
    auto plus = [](const PFrac& x, const PFrac& y) {
        long k = std::max(x.k, y.k);
        auto rp = [](long n) {
            PoissonPoly r = PoissonPoly::scalar(1);
            for (long i = 0; i < n; ++i) r = r * pp_R();
            return r;
        };
        return PFrac{x.num * rp(k - x.k) + y.num * rp(k - y.k), k};
    };

    // {zeta_1, zeta_2} = zeta_1 zeta_2
    CHECK(pfrac_equal_mod_sphere(pbracket(z1, z2), times(z1, z2)));
    // {zeta_1, zeta_1*} = 2 (1 + |zeta_1|^2)
    CHECK(pfrac_equal_mod_sphere(pbracket(z1, z1s),
                                 PFrac{plus(one, times(z1, z1s)).num * Rational(2),
                                       plus(one, times(z1, z1s)).k}));
    // {zeta_1, zeta_2*} = zeta_1 zeta_2*
    CHECK(pfrac_equal_mod_sphere(pbracket(z1, z2s), times(z1, z2s)));
    // {zeta_2, zeta_2*} = -2 (1 + |zeta_1|^2 + |zeta_2|^2)
    PFrac norm = plus(plus(one, times(z1, z1s)), times(z2, z2s));
    CHECK(pfrac_equal_mod_sphere(pbracket(z2, z2s), PFrac{norm.num * Rational(-2), norm.k}));
}

TEST_CASE("the bracket descends to the sphere and preserves the invariant") {
    PoissonPoly sphere = pp_R() + pp_z(3) * pp_zs(3) + pp_z(4) * pp_zs(4) - PoissonPoly::scalar(1);
    for (int slot = 0; slot < 8; ++slot)
        CHECK(reduce_sphere(pbracket(sphere, PoissonPoly::var(slot))).is_zero());

    // |a|^2 + |b|^2 = R(1 - R) on the sphere, and its bracket with every
    // generator stays in the ideal.
    PoissonPoly inv = pp_a() * pp_as() + pp_b() * pp_bs() - pp_R() * (PoissonPoly::scalar(1) - pp_R());
    CHECK(reduce_sphere(inv).is_zero());
    for (const PoissonPoly& g : {pp_a(), pp_b(), pp_R(), pp_as(), pp_bs()})
        CHECK(reduce_sphere(pbracket(inv, g)).is_zero());
}

TEST_CASE("Jacobi identity") { CHECK(jacobi_check(3, 12345u)); }

TEST_CASE("semiclassical limit of the quantum commutators") {
    LimitReport rep = semiclassical_limit_check();
    for (const std::string& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok);
    CHECK(rep.sign == -1);
}
