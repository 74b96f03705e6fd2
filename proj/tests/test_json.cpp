#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klrd/json_io.hpp"

using namespace klrd;

namespace {

ThetaSeq rh(std::vector<std::string> labels) {
    std::vector<Vertex> right;
    for (const auto& s : labels) right.push_back(Vertex::parse(s));
    return ThetaSeq(right);
}

/// Structural equality through the zero-filled accessors, so entries that
/// serialization drops as all-zero still compare equal.
bool same_module(const FDModule& a, const FDModule& b) {
    if (a.nu != b.nu || a.m != b.m || a.dim != b.dim) return false;
    if (a.part_plus != b.part_plus || a.part_minus != b.part_minus) return false;
    for (const auto& [s, d] : a.dim) {
        (void)d;
        for (int l = 1; l <= a.m; ++l)
            if (a.kappa_mat(l, s) != b.kappa_mat(l, s)) return false;
        for (int k = 0; k < a.m; ++k)
            if (a.sigma_mat(k, s) != b.sigma_mat(k, s)) return false;
    }
    return true;
}

std::string pointer_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const JsonError& e) {
        return e.pointer;
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("dimension vector roundtrip and symmetry check") {
    DimVec nu;
    nu.add_pair(Vertex::parse("+p^1"), 2);
    nu.add_pair(Vertex::parse("-p^3"));
    CHECK(dimvec_from_json(dimvec_to_json(nu), "") == nu);

    Json bad = {{"+p^1", 1}};
    CHECK(pointer_of([&] { dimvec_from_json(bad, "/nu"); }) == "/nu/+p^1");
    Json neg = {{"+p^1", 0}, {"+p^-1", 0}};
    CHECK(pointer_of([&] { dimvec_from_json(neg, ""); }) == "/+p^1");
}

TEST_CASE("sequence roundtrip, mirror validation") {
    ThetaSeq s = rh({"+p^1", "-p^3"});
    Json j = seq_to_json(s);
    CHECK(j.size() == 4);
    CHECK(j[0] == "-p^-3");
    CHECK(seq_from_json(j, "") == s);

    Json odd = Json::array({"+p^1"});
    CHECK(pointer_of([&] { seq_from_json(odd, "/a"); }) == "/a");
    Json broken = Json::array({"+p^1", "+p^1"});
    CHECK(pointer_of([&] { seq_from_json(broken, ""); }) == "/0");
    Json junk = Json::array({"+p^2", "+p^-2"});
    CHECK(pointer_of([&] { seq_from_json(junk, ""); }) == "/0");
}

TEST_CASE("matrix roundtrip keeps exact entries") {
    Matrix A(2, 2);
    A.at(0, 0) = Scalar::parse("1*p^2-1*p^0");
    A.at(0, 1) = Scalar(1) * Scalar::p_power(-3);
    A.at(1, 0) = Scalar(7);
    CHECK(matrix_from_json(matrix_to_json(A), "") == A);

    Json ragged = Json::array({Json::array({"1", "0"}), Json::array({"1"})});
    CHECK(pointer_of([&] { matrix_from_json(ragged, "/rows"); }) == "/rows/1");
}

TEST_CASE("module roundtrip: permutation and induced") {
    FDModule P = permutation_module(rh({"+p^1", "+p^5"}));
    CHECK(same_module(module_from_json(module_to_json(P)), P));

    // nilpotent kappas and rectangular crossings survive the trip
    FDModule F = f_functor(truncated_module(Vertex::parse("+p^1"), 2), Vertex::parse("+p^3"));
    REQUIRE(check_fdmodule(F).ok);
    FDModule F2 = module_from_json(module_to_json(F));
    CHECK(same_module(F2, F));
    CHECK(check_fdmodule(F2).ok);
}

TEST_CASE("rank zero module carries the two multiplicities") {
    FDModule phi;
    phi.part_plus = 3;
    Json j = module_to_json(phi);
    CHECK(j["parts"] == Json::array({3, 0}));
    CHECK(same_module(module_from_json(j), phi));
}

TEST_CASE("module schema violations point at the offending node") {
    FDModule P = permutation_module(rh({"+p^1", "+p^5"}));
    Json good = module_to_json(P);

    Json missing = good;
    missing.erase("blocks");
    CHECK(pointer_of([&] { module_from_json(missing); }) == "/blocks");

    Json dup = good;
    dup["blocks"].push_back(dup["blocks"][0]);
    CHECK(pointer_of([&] { module_from_json(dup); }) == "/blocks/4/seq");

    Json badl = good;
    badl["kappa"] = Json::array(
        {Json{{"l", 3}, {"seq", good["blocks"][0]["seq"]}, {"rows", Json::array({Json::array({"0"})})}}});
    CHECK(pointer_of([&] { module_from_json(badl); }) == "/kappa/0/l");

    Json badshape = good;
    badshape["sigma"][0]["rows"] = Json::array({Json::array({"1", "0"})});
    CHECK(pointer_of([&] { module_from_json(badshape); }) == "/sigma/0/rows");
}

TEST_CASE("hecke serialization mirrors the module layout") {
    FDModule P = permutation_module(rh({"+p^1", "+p^5"}));
    HeckeModule H = psi_transport(P);
    Json j = hecke_to_json(H);
    CHECK(j["m"] == 2);
    CHECK(j["blocks"].size() == H.blocks.size());
    CHECK(j["X"].size() == 2);
    CHECK(j["T"].size() == 2);
    CHECK(matrix_from_json(j["X"][0], "") == H.X[0]);
    CHECK(matrix_from_json(j["T"][1], "") == H.T[1]);
}

TEST_CASE("expression files build operator products") {
    Json e;
    e["nu"] = Json{{"+p^1", 1}, {"+p^-1", 1}, {"+p^5", 1}, {"+p^-5", 1}};
    e["product"] = Json::array({Json{{"sigma", 1}}, Json{{"kappa", 2}}});
    KlrOp a = op_from_expr_json(e);
    DimVec nu = dimvec_from_json(e["nu"], "");
    CHECK(a == gen_sigma(1, nu, Flavor::TypeD) * gen_kappa(2, nu, Flavor::TypeD));

    Json empty = e;
    empty["product"] = Json::array();
    CHECK(op_from_expr_json(empty) == gen_idem_total(nu, Flavor::TypeD));

    Json pi_in_d = e;
    pi_in_d["product"] = Json::array({Json{{"pi", 1}}});
    CHECK(pointer_of([&] { op_from_expr_json(pi_in_d); }) == "/product/0/pi");

    Json bad_sigma = e;
    bad_sigma["product"] = Json::array({Json{{"sigma", 2}}});
    CHECK(pointer_of([&] { op_from_expr_json(bad_sigma); }) == "/product/0/sigma");
}

TEST_CASE("pbw serialization of a basis element") {
    DimVec nu;
    nu.add_pair(Vertex::parse("+p^1"));
    nu.add_pair(Vertex::parse("+p^5"));
    ThetaSeq s = rh({"+p^1", "+p^5"});
    KlrOp a = gen_sigma(1, nu, Flavor::TypeD) * gen_idem(s, Flavor::TypeD);
    PbwForm form = pbw_decompose(a);
    Json j = pbw_to_json(form, Flavor::TypeD, WordStyle::GreedyMin);
    CHECK(j["in_algebra"] == true);
    CHECK(j["word_table"] == "greedy-min");
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["word"] == Json::array({1}));
    CHECK(seq_from_json(j["terms"][0]["source"], "") == s);
}

TEST_CASE("label lists parse with validation") {
    DimVec nu = dimvec_from_labels("+p^1, +p^-1, +p^1, +p^-1");
    CHECK(nu.rank() == 2);
    CHECK(nu.count(Vertex::parse("+p^1")) == 2);
    CHECK_THROWS(dimvec_from_labels("+p^1,+p^3"));
    CHECK(seq_from_labels("+p^-1,+p^1") == rh({"+p^1"}));
    CHECK_THROWS(seq_from_labels("+p^1,+p^1"));
}
