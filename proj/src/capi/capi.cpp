#include "nilcert/nilcert.h"

#include <cstdlib>
#include <cstring>

#include "derivations/derivations.hpp"
#include "io/files.hpp"
#include "suite/suite.hpp"

#ifndef NILCERT_DATA_DIR
#define NILCERT_DATA_DIR "data"
#endif

struct nilcert_algebra {
    nilcert::AlgebraFile file;
};

struct nilcert_witness {
    nilcert::DegenerationWitness witness;
};

namespace {

using nilcert::ErrorKind;
using J = nlohmann::ordered_json;

thread_local std::string last_error;

nilcert_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return NILCERT_E_DIVISION_BY_ZERO;
        case ErrorKind::DimensionMismatch: return NILCERT_E_DIMENSION_MISMATCH;
        case ErrorKind::Singular: return NILCERT_E_SINGULAR;
        case ErrorKind::MultipleRadicals: return NILCERT_E_MULTIPLE_RADICALS;
        case ErrorKind::Syntax: return NILCERT_E_SYNTAX;
        case ErrorKind::UnknownName: return NILCERT_E_UNKNOWN_NAME;
        case ErrorKind::NotInVariety: return NILCERT_E_NOT_IN_VARIETY;
        case ErrorKind::Cycle: return NILCERT_E_CYCLE;
        case ErrorKind::Io: return NILCERT_E_IO;
        case ErrorKind::InvalidArgument: return NILCERT_E_INVALID_ARGUMENT;
    }
    return NILCERT_E_INTERNAL;
}

template <class Fn>
nilcert_status guarded(Fn&& fn) {
    last_error.clear();
    try {
        fn();
        return NILCERT_OK;
    } catch (const nilcert::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        last_error = e.what();
        return NILCERT_E_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return NILCERT_E_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw nilcert::Error(ErrorKind::InvalidArgument, what);
}

char* copy_out(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::filesystem::path data_dir_or_default(const char* dir) { return dir && *dir ? dir : NILCERT_DATA_DIR; }

std::vector<std::complex<double>> samples_or_default(const double* ts, std::size_t count) {
    if (!ts || count == 0) return {1e-4};
    return {ts, ts + count};
}

J matrix_json(const nilcert::Matrix<nilcert::GaussianRational>& m) {
    J rows = J::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        J row = J::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        rows.push_back(row);
    }
    return rows;
}

nilcert::DegenerationGraph verified_graph(const std::filesystem::path& dir) {
    std::vector<nilcert::DegenerationWitness> ws;
    for (const auto& p : nilcert::list_files(dir / "witnesses", ".wit")) ws.push_back(nilcert::read_witness(p));
    std::vector<nilcert::Verdict> verified;
    for (auto& v : nilcert::verify_many(ws, 1))
        if (v.status == nilcert::VerdictStatus::Verified) verified.push_back(std::move(v));
    return nilcert::build_graph(verified);
}

}  // namespace

extern "C" {

const char* nilcert_version(void) { return "0.1.0"; }

const char* nilcert_status_name(nilcert_status status) {
    switch (status) {
        case NILCERT_OK: return "OK";
        case NILCERT_E_DIVISION_BY_ZERO: return "DIVISION_BY_ZERO";
        case NILCERT_E_DIMENSION_MISMATCH: return "DIMENSION_MISMATCH";
        case NILCERT_E_SINGULAR: return "SINGULAR";
        case NILCERT_E_MULTIPLE_RADICALS: return "MULTIPLE_RADICALS";
        case NILCERT_E_SYNTAX: return "SYNTAX_ERROR";
        case NILCERT_E_UNKNOWN_NAME: return "UNKNOWN_NAME";
        case NILCERT_E_NOT_IN_VARIETY: return "NOT_IN_VARIETY";
        case NILCERT_E_CYCLE: return "CYCLE";
        case NILCERT_E_IO: return "IO_ERROR";
        case NILCERT_E_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
        case NILCERT_E_INTERNAL: return "INTERNAL";
    }
    return "INTERNAL";
}

const char* nilcert_last_error(void) { return last_error.c_str(); }

void nilcert_string_free(char* s) { std::free(s); }

nilcert_status nilcert_algebra_from_catalog(const char* name, nilcert_algebra** out) {
    return guarded([&] {
        require(name && out, "null argument");
        *out = new nilcert_algebra{nilcert::catalog_algebra_file(nilcert::catalog::get(name))};
    });
}

nilcert_status nilcert_algebra_read(const char* path, nilcert_algebra** out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new nilcert_algebra{nilcert::read_algebra(path)};
    });
}

nilcert_status nilcert_algebra_parse(const char* text, nilcert_algebra** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new nilcert_algebra{nilcert::parse_algebra(text)};
    });
}

void nilcert_algebra_free(nilcert_algebra* a) { delete a; }

size_t nilcert_algebra_dim(const nilcert_algebra* a) { return a ? a->file.table.dim() : 0; }

nilcert_status nilcert_algebra_to_text(const nilcert_algebra* a, char** out) {
    return guarded([&] {
        require(a && out, "null argument");
        *out = copy_out(nilcert::print_algebra(a->file));
    });
}

nilcert_status nilcert_algebra_invariants(const nilcert_algebra* a, char** json_out) {
    return guarded([&] {
        require(a && json_out, "null argument");
        const auto& t = a->file.table;
        const auto ids = nilcert::check_identities(t);
        const auto fp = nilcert::fingerprint(t);
        J j;
        j["name"] = a->file.name;
        j["dim"] = t.dim();
        j["commutative"] = ids.commutative;
        j["associative"] = ids.associative;
        j["dim_der"] = fp.dim_der;
        j["orbit_dim"] = t.dim() * t.dim() - fp.dim_der;
        j["dims_of_powers"] = fp.dims_of_powers;
        j["dim_ann"] = fp.dim_ann;
        j["nilpotency_index"] = fp.nilpotency_index ? J(*fp.nilpotency_index) : J(nullptr);
        *json_out = copy_out(j.dump(2));
    });
}

nilcert_status nilcert_algebra_derivations(const nilcert_algebra* a, char** json_out) {
    return guarded([&] {
        require(a && json_out, "null argument");
        const auto space = nilcert::derivation_space(a->file.table);
        J j;
        j["name"] = a->file.name;
        j["dimension"] = space.dimension;
        j["convention"] = "row a holds D(e_a)";
        j["basis"] = J::array();
        for (const auto& d : space.basis) j["basis"].push_back(matrix_json(d));
        *json_out = copy_out(j.dump(2));
    });
}

nilcert_status nilcert_algebra_identify(const nilcert_algebra* a, char** json_out) {
    return guarded([&] {
        require(a && json_out, "null argument");
        const auto names = nilcert::catalog::identify(a->file.table);
        J j;
        j["name"] = a->file.name;
        j["fingerprint"] = nilcert::fingerprint(a->file.table).to_string();
        j["candidates"] = names;
        *json_out = copy_out(j.dump(2));
    });
}

nilcert_status nilcert_witness_read(const char* path, nilcert_witness** out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new nilcert_witness{nilcert::read_witness(path)};
    });
}

nilcert_status nilcert_witness_parse(const char* text, nilcert_witness** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new nilcert_witness{nilcert::parse_witness(text)};
    });
}

void nilcert_witness_free(nilcert_witness* w) { delete w; }

nilcert_status nilcert_witness_to_text(const nilcert_witness* w, char** out) {
    return guarded([&] {
        require(w && out, "null argument");
        *out = copy_out(nilcert::print_witness(w->witness));
    });
}

nilcert_status nilcert_witness_verify(const nilcert_witness* w, const double* t_samples, size_t t_sample_count,
                                      char** json_out, int* verified) {
    return guarded([&] {
        require(w && json_out, "null argument");
        const auto v = nilcert::verify(w->witness);
        J j = nilcert::verdict_to_json(v);
        if (v.status == nilcert::VerdictStatus::Verified)
            j["numeric"] = nilcert::numeric_to_json(
                nilcert::numeric_crosscheck(w->witness, samples_or_default(t_samples, t_sample_count)));
        *json_out = copy_out(j.dump(2));
        if (verified) *verified = v.status == nilcert::VerdictStatus::Verified;
    });
}

void nilcert_verify_options_init(nilcert_verify_options* options) {
    if (!options) return;
    nilcert::SuiteOptions d;
    options->data_dir = nullptr;
    options->seed = d.seed;
    options->samples = d.samples;
    options->probe_samples = d.probe_samples;
    options->t_samples = nullptr;
    options->t_sample_count = 0;
    options->jobs = d.jobs;
    options->with_timings = 1;
}

nilcert_status nilcert_verify_all(const nilcert_verify_options* options, char** json_out, int* all_pass) {
    return guarded([&] {
        require(json_out, "null argument");
        nilcert_verify_options o;
        nilcert_verify_options_init(&o);
        if (options) o = *options;
        nilcert::SuiteOptions s;
        s.data_dir = data_dir_or_default(o.data_dir);
        s.seed = o.seed;
        s.samples = o.samples;
        s.probe_samples = o.probe_samples;
        if (o.t_samples && o.t_sample_count) s.t_samples.assign(o.t_samples, o.t_samples + o.t_sample_count);
        s.jobs = o.jobs ? o.jobs : 1;
        const auto result = nilcert::run_suite(s);
        *json_out = copy_out(result.to_json(o.with_timings != 0).dump(2));
        if (all_pass) *all_pass = result.all_pass();
    });
}

nilcert_status nilcert_graph_emit(const char* data_dir, nilcert_graph_format format, nilcert_graph_view view,
                                  char** out) {
    return guarded([&] {
        require(out, "null argument");
        require(format == NILCERT_GRAPH_DOT || format == NILCERT_GRAPH_JSON, "unknown graph format");
        auto g = verified_graph(data_dir_or_default(data_dir));
        if (view == NILCERT_VIEW_CLOSURE)
            g = nilcert::with_edges(g, nilcert::transitive_closure(g));
        else if (view == NILCERT_VIEW_HASSE)
            g = nilcert::with_edges(g, nilcert::hasse_reduction(g));
        else
            require(view == NILCERT_VIEW_GRAPH, "unknown graph view");
        *out = copy_out(format == NILCERT_GRAPH_DOT ? nilcert::emit_dot(g) : nilcert::emit_json(g));
    });
}

}  // extern "C"
