#include "dads/io.hpp"

#include <fstream>

namespace dads::io {

namespace {

const json& require_key(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

std::uint64_t as_uint(const json& v, const char* what) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw ParseError(std::string(what) + " must be a nonnegative integer");
}

std::uint64_t require_uint(const json& j, const char* key) {
    return as_uint(require_key(j, key), (std::string("\"") + key + "\"").c_str());
}

std::int64_t require_int(const json& j, const char* key) {
    const json& v = require_key(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

void require_kind(const json& j, const char* kind) {
    if (!j.is_object()) throw ParseError("top-level value must be an object");
    const json& v = require_key(j, "kind");
    if (!v.is_string() || v.get<std::string>() != kind)
        throw ParseError(std::string("expected \"kind\":\"") + kind + "\"");
}

Field parse_field(const json& j) {
    std::uint64_t p = require_uint(j, "field");
    if (p > 0x7FFFFFFFull) throw MathError("field modulus exceeds 2^31 - 1");
    return Field(static_cast<std::uint32_t>(p));  // primality checked here
}

Exponent parse_exponent(const json& v, std::size_t r) {
    if (!v.is_array() || v.size() != r)
        throw ParseError("\"exp\" must be an array of length r");
    std::vector<std::uint64_t> coords;
    coords.reserve(r);
    for (const json& x : v) coords.push_back(as_uint(x, "exponent entry"));
    return Exponent(std::move(coords));
}

Fp parse_coef(const json& entry, const Field& field) {
    std::uint64_t c = require_uint(entry, "coef");
    if (c >= field.modulus())
        throw ParseError("coefficient is not a canonical representative in [0, p)");
    return Fp{static_cast<std::uint32_t>(c)};
}

json exponent_to_json(const Exponent& e) {
    json a = json::array();
    for (std::size_t i = 0; i < e.vars(); ++i) a.push_back(e[i]);
    return a;
}

json poly_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"coef", c.v}, {"exp", exponent_to_json(e)}});
    return terms;
}

Polynomial poly_from_json(const json& terms, const Field& field, std::size_t r) {
    if (!terms.is_array()) throw ParseError("polynomial must be an array of terms");
    Polynomial p(field, r);
    for (const json& t : terms) {
        if (!t.is_object()) throw ParseError("term must be an object");
        Exponent e = parse_exponent(require_key(t, "exp"), r);
        if (p.coeff(e) != field.zero()) throw ParseError("duplicate exponent in term list");
        p.add_term(e, parse_coef(t, field));
    }
    return p;
}

json basis_vector_to_json(const SeriesVector& v) {
    json coeffs = json::array();
    for (std::size_t lambda = 0; lambda < v.size(); ++lambda)
        for (const auto& [e, c] : v[lambda].coeffs())
            coeffs.push_back({{"coef", c.v}, {"component", lambda}, {"exp", exponent_to_json(e)}});
    return coeffs;
}

SeriesVector basis_vector_from_json(const json& coeffs, const Field& field, std::size_t r,
                                    std::size_t l, std::int64_t bound) {
    if (!coeffs.is_array()) throw ParseError("coefficient list must be an array");
    std::vector<TruncatedSeries> comps(l, TruncatedSeries(field, r, bound));
    for (const json& entry : coeffs) {
        if (!entry.is_object()) throw ParseError("coefficient entry must be an object");
        std::uint64_t lambda = require_uint(entry, "component");
        if (lambda >= l) throw ParseError("component index out of range");
        Exponent e = parse_exponent(require_key(entry, "exp"), r);
        if (bound < 0 || e.degree() > static_cast<std::uint64_t>(bound))
            throw ParseError("coefficient exponent lies outside the declared bound");
        if (comps[lambda].coeff(e) != field.zero())
            throw ParseError("duplicate coefficient entry");
        comps[lambda].set_coeff(e, parse_coef(entry, field));
    }
    return SeriesVector(std::move(comps));
}

}  // namespace

json system_to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.k(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.l(); ++j) row.push_back(poly_to_json(m.entry(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"kind", "system"},
                {"field", m.field().modulus()},
                {"r", m.vars()},
                {"k", m.k()},
                {"l", m.l()},
                {"rows", std::move(rows)}};
}

PolyMatrix system_from_json(const json& j) {
    require_kind(j, "system");
    Field field = parse_field(j);
    std::size_t r = require_uint(j, "r");
    std::size_t k = require_uint(j, "k");
    std::size_t l = require_uint(j, "l");
    if (r == 0) throw ParseError("\"r\" must be >= 1");
    if (k == 0 || l == 0) throw ParseError("\"k\" and \"l\" must be >= 1");
    const json& rows = require_key(j, "rows");
    if (!rows.is_array() || rows.size() != k) throw ParseError("\"rows\" must be an array of k rows");
    std::vector<Polynomial> entries;
    entries.reserve(k * l);
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != l)
            throw ParseError("every row must be an array of l polynomials");
        for (const json& cell : row) entries.push_back(poly_from_json(cell, field, r));
    }
    return PolyMatrix(k, l, std::move(entries));
}

std::vector<PolyVector> rows_from_json(const json& j) {
    PolyMatrix m = system_from_json(j);
    std::vector<PolyVector> out;
    out.reserve(m.k());
    for (std::size_t i = 0; i < m.k(); ++i) out.push_back(m.row(i));
    return out;
}

json series_to_json(const SeriesVector& w) {
    return json{{"kind", "series"},
                {"field", w.field().modulus()},
                {"r", w.vars()},
                {"l", w.size()},
                {"bound", w.bound()},
                {"coeffs", basis_vector_to_json(w)}};
}

SeriesVector series_from_json(const json& j) {
    require_kind(j, "series");
    Field field = parse_field(j);
    std::size_t r = require_uint(j, "r");
    std::size_t l = require_uint(j, "l");
    if (r == 0) throw ParseError("\"r\" must be >= 1");
    if (l == 0) throw ParseError("\"l\" must be >= 1");
    std::int64_t bound = require_int(j, "bound");
    if (bound < -1) throw ParseError("\"bound\" must be >= -1");
    return basis_vector_from_json(require_key(j, "coeffs"), field, r, l, bound);
}

json slice_to_json(const BehaviorSlice& slice, bool certified) {
    json basis = json::array();
    for (const SeriesVector& v : slice.basis) basis.push_back(basis_vector_to_json(v));
    return json{{"kind", "slice"},
                {"field", slice.system.field().modulus()},
                {"r", slice.system.vars()},
                {"l", slice.system.l()},
                {"bound", slice.bound},
                {"dim", slice.dim()},
                {"certificate", certified ? "verified" : "failed"},
                {"basis", std::move(basis)}};
}

SliceData slice_from_json(const json& j) {
    require_kind(j, "slice");
    Field field = parse_field(j);
    std::size_t r = require_uint(j, "r");
    std::size_t l = require_uint(j, "l");
    if (r == 0) throw ParseError("\"r\" must be >= 1");
    if (l == 0) throw ParseError("\"l\" must be >= 1");
    std::int64_t bound = require_int(j, "bound");
    if (bound < -1) throw ParseError("\"bound\" must be >= -1");
    const json& basis = require_key(j, "basis");
    if (!basis.is_array()) throw ParseError("\"basis\" must be an array");
    std::uint64_t dim = require_uint(j, "dim");
    if (dim != basis.size()) throw ParseError("\"dim\" disagrees with the basis size");
    SliceData out{field, r, l, bound, {}};
    for (const json& v : basis)
        out.basis.push_back(basis_vector_from_json(v, field, r, l, bound));
    return out;
}

json scalar_to_json(const Field& field, Fp value) {
    return json{{"kind", "scalar"}, {"field", field.modulus()}, {"value", value.v}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << canonical_dump(j);
    if (!out) throw ParseError("failed writing file: " + path);
}

}  // namespace dads::io
