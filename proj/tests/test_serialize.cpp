#include "sjb/boolean_sjb.hpp"
#include "sjb/render.hpp"
#include "sjb/serialize.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace sjb;

TEST_CASE("SJB JSON round trip is byte identical") {
    for (const auto& basis :
         {sjb_boolean(3), sjb_product(PosetSpec(std::vector<int>{2, 3, 1}))}) {
        std::string once = sjb_to_json(basis);
        auto parsed = sjb_from_json(once);
        std::string twice = sjb_to_json(parsed);
        CHECK(once == twice);
        CHECK(parsed.spec == basis.spec);
        CHECK(parsed.total_vectors() == basis.total_vectors());
        CHECK(verify_sjb(parsed.spec, parsed).all_pass());
    }
}

TEST_CASE("parsing rejects malformed input") {
    CHECK_THROWS(sjb_from_json("not json at all"));
    CHECK_THROWS(sjb_from_json("{\"spec\": {}}"));
}

TEST_CASE("rational coefficients survive as decimal strings") {
    SymmetricJordanBasis tiny{PosetSpec::boolean(1), {}};
    std::vector<Term> terms{{0, Rational(mpz_class("123456789012345678901234567890"))}};
    tiny.chains.push_back({0, {PosetVector::from_terms(std::move(terms)),
                               PosetVector::unit(1)}});
    auto text = sjb_to_json(tiny);
    auto parsed = sjb_from_json(text);
    CHECK(parsed.chains[0].vectors[0].coeff_of(0) ==
          Rational(mpz_class("123456789012345678901234567890")));
}

TEST_CASE("report and dims serialization carry the pass flags") {
    VerificationReport rep;
    rep.add("alpha", true);
    rep.add("beta", false, "witness");
    auto text = report_to_json("B(2)", rep);
    CHECK(text.find("\"pass\": false") != std::string::npos);
    CHECK(text.find("witness") != std::string::npos);

    auto dims = dims_table(4);
    auto dtext = dims_to_json(dims);
    CHECK(dtext.find("\"35\"") != std::string::npos);
    CHECK(dtext.find("\"16\"") != std::string::npos);
}

TEST_CASE("block image serialization includes eligibility and entries") {
    auto img = phi_blocks_formula(4, 2, 2, 2);
    auto text = blocks_to_json(img);
    CHECK(text.find("\"coeff_num\": \"1\"") != std::string::npos);
    auto zero = phi_blocks_formula(4, 0, 0, 0);
    auto ztext = blocks_to_json(zero);
    CHECK(ztext.find("\"zero\": true") != std::string::npos);
}

TEST_CASE("canonical rendering of vectors") {
    PosetSpec b3 = PosetSpec::boolean(3);
    CHECK(render_vector(b3, testutil::bvec({{{3}, 2}, {{1}, -1}, {{2}, -1}})) ==
          "-{1} - {2} + 2{3}");
    CHECK(render_vector(b3, testutil::bvec({{{}, 1}})) == "{}");
    CHECK(render_vector(b3, PosetVector()) == "0");

    PosetSpec m222(std::vector<int>{2, 2});
    CHECK(render_vector(m222, testutil::vec(m222, {{{2, 1}, 3}, {{1, 2}, 3}})) ==
          "3(2,1) + 3(1,2)");
}
