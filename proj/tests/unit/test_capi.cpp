#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <thread>

#include <json.hpp>

#include "nilcert/nilcert.h"

namespace {

using json = nlohmann::json;

const std::string kData = NILCERT_DATA_DIR;

json take(char* s) {
    REQUIRE(s != nullptr);
    json j = json::parse(s);
    nilcert_string_free(s);
    return j;
}

}  // namespace

TEST_CASE("algebra handles") {
    nilcert_algebra* a = nullptr;
    REQUIRE(nilcert_algebra_from_catalog("A_01", &a) == NILCERT_OK);
    CHECK(nilcert_algebra_dim(a) == 5);
    char* out = nullptr;
    REQUIRE(nilcert_algebra_derivations(a, &out) == NILCERT_OK);
    auto d = take(out);
    CHECK(d["dimension"] == 5);
    CHECK(d["basis"].size() == 5);
    REQUIRE(nilcert_algebra_invariants(a, &out) == NILCERT_OK);
    auto inv = take(out);
    CHECK(inv["dim_der"] == 5);
    CHECK(inv["orbit_dim"] == 20);
    CHECK(inv["nilpotency_index"] == 6);
    REQUIRE(nilcert_algebra_to_text(a, &out) == NILCERT_OK);
    std::string text = out;
    nilcert_string_free(out);
    nilcert_algebra_free(a);

    nilcert_algebra* b = nullptr;
    REQUIRE(nilcert_algebra_parse(text.c_str(), &b) == NILCERT_OK);
    REQUIRE(nilcert_algebra_identify(b, &out) == NILCERT_OK);
    CHECK(take(out)["candidates"] == json::array({"A_01"}));
    nilcert_algebra_free(b);

    REQUIRE(nilcert_algebra_read((kData + "/algebras/C5.alg").c_str(), &b) == NILCERT_OK);
    REQUIRE(nilcert_algebra_identify(b, &out) == NILCERT_OK);
    CHECK(take(out)["candidates"] == json::array({"C5"}));
    nilcert_algebra_free(b);
    nilcert_algebra_free(nullptr);
}

TEST_CASE("error codes") {
    nilcert_algebra* a = nullptr;
    CHECK(nilcert_algebra_from_catalog("A_99", &a) == NILCERT_E_UNKNOWN_NAME);
    CHECK(a == nullptr);
    CHECK(std::string(nilcert_last_error()).find("A_99") != std::string::npos);
    CHECK(nilcert_algebra_parse("name X\ndim 2\ne_1 * e_1 = e_\n", &a) == NILCERT_E_SYNTAX);
    CHECK(nilcert_algebra_read("/no/such/file.alg", &a) == NILCERT_E_IO);
    CHECK(nilcert_algebra_from_catalog(nullptr, &a) == NILCERT_E_INVALID_ARGUMENT);
    REQUIRE(nilcert_algebra_parse("name X\ndim 2\ne_1 * e_1 = e_1\n", &a) == NILCERT_OK);
    char* out = nullptr;
    CHECK(nilcert_algebra_identify(a, &out) == NILCERT_E_NOT_IN_VARIETY);
    CHECK(out == nullptr);
    nilcert_algebra_free(a);

    nilcert_witness* w = nullptr;
    CHECK(nilcert_witness_parse("source A_01\ntarget A_02\nE_1 = sqrt(t) e_1 + sqrt(1 + t) e_2\n", &w) ==
          NILCERT_E_MULTIPLE_RADICALS);
    CHECK(std::string(nilcert_status_name(NILCERT_E_CYCLE)) == "CYCLE");

    // the message is per thread
    std::string other;
    std::thread([&] { other = nilcert_last_error(); }).join();
    CHECK(other.empty());
}

TEST_CASE("witnesses") {
    nilcert_witness* w = nullptr;
    REQUIRE(nilcert_witness_read((kData + "/witnesses/A23_A24.wit").c_str(), &w) == NILCERT_OK);
    char* out = nullptr;
    int ok = 0;
    const double ts[] = {1e-3, 1e-4};
    REQUIRE(nilcert_witness_verify(w, ts, 2, &out, &ok) == NILCERT_OK);
    CHECK(ok == 1);
    auto v = take(out);
    CHECK(v["status"] == "VERIFIED");
    CHECK(v["numeric"].size() == 2);
    REQUIRE(nilcert_witness_to_text(w, &out) == NILCERT_OK);
    nilcert_witness* again = nullptr;
    CHECK(nilcert_witness_parse(out, &again) == NILCERT_OK);
    nilcert_string_free(out);
    nilcert_witness_free(again);
    nilcert_witness_free(w);

    REQUIRE(nilcert_witness_parse("source A_24\ntarget A_23\nE_1 = e_1\nE_2 = e_2\nE_3 = e_3\nE_4 = e_4\nE_5 = e_5\n", &w) == NILCERT_OK);
    REQUIRE(nilcert_witness_verify(w, nullptr, 0, &out, &ok) == NILCERT_OK);
    CHECK(ok == 0);
    CHECK(take(out)["status"] == "LIMIT_MISMATCH");
    nilcert_witness_free(w);
}

TEST_CASE("graph and full run") {
    char* out = nullptr;
    REQUIRE(nilcert_graph_emit(kData.c_str(), NILCERT_GRAPH_JSON, NILCERT_VIEW_HASSE, &out) == NILCERT_OK);
    auto g = take(out);
    CHECK(g["nodes"].size() == 25);
    CHECK(g["edges"].size() == 42);
    REQUIRE(nilcert_graph_emit(kData.c_str(), NILCERT_GRAPH_DOT, NILCERT_VIEW_CLOSURE, &out) == NILCERT_OK);
    CHECK(std::string(out).rfind("digraph", 0) == 0);
    nilcert_string_free(out);
    CHECK(nilcert_graph_emit(kData.c_str(), static_cast<nilcert_graph_format>(7), NILCERT_VIEW_GRAPH, &out) ==
          NILCERT_E_INVALID_ARGUMENT);

    nilcert_verify_options o;
    nilcert_verify_options_init(&o);
    o.data_dir = kData.c_str();
    o.with_timings = 0;
    o.samples = 100;
    o.probe_samples = 20;
    int pass = 0;
    REQUIRE(nilcert_verify_all(&o, &out, &pass) == NILCERT_OK);
    CHECK(pass == 1);
    auto r = take(out);
    CHECK(r["summary"]["witnesses_verified"] == 44);
    CHECK_FALSE(r.contains("timings_seconds"));

    o.data_dir = "/no/such/dir";
    CHECK(nilcert_verify_all(&o, &out, &pass) == NILCERT_E_IO);
}
