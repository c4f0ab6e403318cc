#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "liekn/check_report.hpp"
#include "liekn/deformation.hpp"
#include "liekn/errors.hpp"
#include "liekn/grid_search.hpp"
#include "liekn/lie_algebra.hpp"
#include "liekn/linalg.hpp"
#include "liekn/rational.hpp"
#include "liekn/representation.hpp"
#include "liekn/structures.hpp"

namespace liekn::io {

using json = nlohmann::ordered_json;

/// A stanza the requested operation needs is absent.
class MissingStanza : public ParseError {
public:
    explicit MissingStanza(const std::string& stanza) : ParseError("missing stanza: " + stanza), stanza_(stanza) {}
    const std::string& stanza() const noexcept { return stanza_; }

private:
    std::string stanza_;
};

/// Operator keys in the order they are written.
inline const std::vector<std::string>& operator_keys() {
    static const std::vector<std::string> keys{"N", "S", "T", "R", "T1", "T2"};
    return keys;
}

/**
 * Parsed but unvalidated input. The bracket may violate Jacobi and the
 * action may fail the representation axiom; validation happens when the
 * document is turned into a LieAlgebra / Representation.
 */
struct Document {
    Bracket bracket;
    std::vector<std::string> basis;
    /// "ad", "coad", or explicit matrices.
    std::optional<std::variant<std::string, RepAction>> representation;
    OperatorSet operators;
    std::optional<DeformationPair> deformation;
    std::optional<Bivector> bivector;
    std::optional<BilinearForm> bilinear_form;
    bool form_given_as_b_sharp = false;

    std::size_t dim() const noexcept { return bracket.dim(); }

    const Matrix& op(const std::string& key) const {
        auto it = operators.find(key);
        if (it == operators.end()) throw MissingStanza("operators/" + key);
        return it->second;
    }
};

// ---------------------------------------------------------------------------
// Writing
// ---------------------------------------------------------------------------

inline json to_json(const Rational& q) { return q.str(); }

inline json to_json(const Vector& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(v[i].str());
    return a;
}

inline json to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

/// Nonzero table entries only, ordered by (i, j) and then k.
inline json brackets_json(const Bracket& b) {
    json a = json::array();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i + 1; j < b.dim(); ++j) {
            const Vector v = b.basis_bracket(i, j);
            if (v.is_zero()) continue;
            json value = json::object();
            for (std::size_t k = 0; k < v.dim(); ++k)
                if (!v[k].is_zero()) value[std::to_string(k)] = v[k].str();
            a.push_back(json{{"i", i}, {"j", j}, {"value", std::move(value)}});
        }
    return a;
}

inline json action_json(const RepAction& a) {
    json mats = json::array();
    for (const auto& m : a.matrices()) mats.push_back(to_json(m));
    return json{{"module_dim", a.module_dim()}, {"matrices", std::move(mats)}};
}

inline json algebra_json(const Bracket& b, const std::vector<std::string>& basis) {
    return json{{"dim", b.dim()}, {"basis", basis}, {"brackets", brackets_json(b)}};
}

inline json operators_json(const OperatorSet& ops) {
    json o = json::object();
    for (const auto& key : operator_keys())
        if (auto it = ops.find(key); it != ops.end()) o[key] = to_json(it->second);
    return o;
}

inline json to_json(const Document& d) {
    json j = json::object();
    j["algebra"] = algebra_json(d.bracket, d.basis);
    if (d.representation) {
        if (const auto* s = std::get_if<std::string>(&*d.representation))
            j["representation"] = *s;
        else
            j["representation"] = action_json(std::get<RepAction>(*d.representation));
    }
    if (!d.operators.empty()) j["operators"] = operators_json(d.operators);
    if (d.deformation)
        j["deformation"] = json{{"omega", json{{"brackets", brackets_json(d.deformation->omega)}}},
                                {"varpi", action_json(d.deformation->varpi)}};
    if (d.bivector) j["bivector"] = json{{"pi_sharp", to_json(d.bivector->pi_sharp)}};
    if (d.bilinear_form) {
        if (d.form_given_as_b_sharp)
            j["bilinear_form"] = json{{"b_sharp", to_json(b_sharp(*d.bilinear_form))}};
        else
            j["bilinear_form"] = json{{"gram", to_json(d.bilinear_form->gram)}};
    }
    return j;
}

namespace detail {

inline bool is_flat_array(const json& j) {
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

inline void write_json(const json& j, std::string& out, std::size_t indent) {
    const std::string pad(indent, ' '), inner(indent + 2, ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            out += first ? "" : ",\n";
            first = false;
            out += inner + json(key).dump() + ": ";
            write_json(value, out, indent + 2);
        }
        out += "\n" + pad + "}";
    } else if (j.is_array() && !j.empty() && !is_flat_array(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += (i ? ",\n" : "") + inner;
            write_json(j[i], out, indent + 2);
        }
        out += "\n" + pad + "]";
    } else if (j.is_array()) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
        out += "]";
    } else {
        out += j.dump();
    }
}

} // namespace detail

/// Canonical text: fixed key order, two-space indent, arrays of scalars on
/// one line, trailing newline.
inline std::string dump(const json& j) {
    std::string out;
    detail::write_json(j, out, 0);
    return out + "\n";
}

inline std::string write_document(const Document& d) { return dump(to_json(d)); }

// ---------------------------------------------------------------------------
// Reading
// ---------------------------------------------------------------------------

namespace detail {

[[noreturn]] inline void fail(const std::string& pointer, const std::string& message) {
    throw ParseError((pointer.empty() ? std::string("/") : pointer) + ": " + message);
}

inline const json& member(const json& obj, const std::string& pointer, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(pointer, std::string("missing key \"") + key + "\"");
    return *it;
}

inline void require_object(const json& j, const std::string& pointer) {
    if (!j.is_object()) fail(pointer, "expected an object");
}

inline void reject_unknown_keys(const json& obj, const std::string& pointer, const std::vector<std::string>& allowed) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const auto& a : allowed) ok = ok || a == key;
        if (!ok) fail(pointer, "unknown key \"" + key + "\"");
    }
}

inline std::size_t read_index(const json& j, const std::string& pointer) {
    if (!j.is_number_unsigned()) fail(pointer, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

inline Rational read_rational(const json& j, const std::string& pointer) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) fail(pointer, "expected a rational string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(pointer, e.what());
    }
}

inline Matrix read_matrix(const json& j, const std::string& pointer, std::optional<std::size_t> rows,
                          std::optional<std::size_t> cols) {
    if (!j.is_array()) fail(pointer, "expected an array of rows");
    if (rows && j.size() != *rows) fail(pointer, "expected " + std::to_string(*rows) + " rows, got " + std::to_string(j.size()));
    std::size_t width = cols ? *cols : (j.empty() ? 0 : j.front().size());
    Matrix m(j.size(), width);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string rp = pointer + "/" + std::to_string(i);
        const json& row = j[i];
        if (!row.is_array()) fail(rp, "expected a row array");
        if (row.size() != width)
            fail(rp, "expected " + std::to_string(width) + " entries, got " + std::to_string(row.size()));
        for (std::size_t k = 0; k < width; ++k) m(i, k) = read_rational(row[k], rp + "/" + std::to_string(k));
    }
    return m;
}

inline Bracket read_brackets(const json& j, const std::string& pointer, std::size_t n) {
    if (!j.is_array()) fail(pointer, "expected an array of bracket entries");
    Bracket b(n);
    std::vector<bool> seen(n * n, false);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string ep = pointer + "/" + std::to_string(e);
        const json& entry = j[e];
        require_object(entry, ep);
        reject_unknown_keys(entry, ep, {"i", "j", "value"});
        const std::size_t i = read_index(member(entry, ep, "i"), ep + "/i");
        const std::size_t k = read_index(member(entry, ep, "j"), ep + "/j");
        if (i >= n || k >= n) fail(ep, "index out of range for dimension " + std::to_string(n));
        if (i >= k) fail(ep, "bracket entries require i < j");
        if (seen[i * n + k]) fail(ep, "duplicate entry for (" + std::to_string(i) + "," + std::to_string(k) + ")");
        seen[i * n + k] = true;
        const json& value = member(entry, ep, "value");
        const std::string vp = ep + "/value";
        require_object(value, vp);
        Vector v(n);
        for (const auto& [key, q] : value.items()) {
            std::size_t c = 0;
            try {
                std::size_t used = 0;
                c = std::stoul(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                fail(vp, "coordinate key \"" + key + "\" is not an index");
            }
            if (c >= n) fail(vp, "coordinate key \"" + key + "\" out of range");
            v[c] = read_rational(q, vp + "/" + key);
        }
        b.set(i, k, std::move(v));
    }
    return b;
}

inline RepAction read_action(const json& j, const std::string& pointer, std::size_t n,
                             std::optional<std::size_t> module_dim) {
    require_object(j, pointer);
    reject_unknown_keys(j, pointer, {"module_dim", "matrices"});
    const std::size_t m = read_index(member(j, pointer, "module_dim"), pointer + "/module_dim");
    if (module_dim && m != *module_dim)
        fail(pointer + "/module_dim", "expected " + std::to_string(*module_dim));
    const json& mats = member(j, pointer, "matrices");
    if (!mats.is_array()) fail(pointer + "/matrices", "expected an array of matrices");
    if (mats.size() != n)
        fail(pointer + "/matrices", "expected " + std::to_string(n) + " matrices, got " + std::to_string(mats.size()));
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(read_matrix(mats[i], pointer + "/matrices/" + std::to_string(i), m, m));
    return RepAction(m, std::move(out));
}

} // namespace detail

/// Parses a document. Syntax errors carry the byte position, semantic
/// errors the JSON pointer of the offending value.
inline Document parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    using namespace detail;
    require_object(root, "");
    reject_unknown_keys(root, "", {"algebra", "representation", "operators", "deformation", "bivector", "bilinear_form"});
    if (!root.contains("algebra")) throw MissingStanza("algebra");

    Document d;
    const json& alg = root["algebra"];
    require_object(alg, "/algebra");
    reject_unknown_keys(alg, "/algebra", {"dim", "basis", "brackets"});
    const std::size_t n = read_index(member(alg, "/algebra", "dim"), "/algebra/dim");
    if (alg.contains("basis")) {
        const json& names = alg["basis"];
        if (!names.is_array() || names.size() != n) fail("/algebra/basis", "expected " + std::to_string(n) + " names");
        for (std::size_t i = 0; i < n; ++i) {
            if (!names[i].is_string()) fail("/algebra/basis/" + std::to_string(i), "expected a string");
            d.basis.push_back(names[i].get<std::string>());
        }
    } else {
        d.basis = default_basis_names(n);
    }
    d.bracket = alg.contains("brackets") ? read_brackets(alg["brackets"], "/algebra/brackets", n) : Bracket(n);

    if (root.contains("representation")) {
        const json& r = root["representation"];
        if (r.is_string()) {
            const std::string s = r.get<std::string>();
            if (s != "ad" && s != "coad") fail("/representation", "expected \"ad\", \"coad\" or an object");
            d.representation = s;
        } else {
            d.representation = read_action(r, "/representation", n, std::nullopt);
        }
    }

    const std::size_t m = [&]() -> std::size_t {
        if (!d.representation) return n;
        if (const auto* a = std::get_if<RepAction>(&*d.representation)) return a->module_dim();
        return n;
    }();

    if (root.contains("operators")) {
        const json& ops = root["operators"];
        require_object(ops, "/operators");
        reject_unknown_keys(ops, "/operators", operator_keys());
        for (const auto& [key, value] : ops.items()) {
            std::size_t rows = n, cols = n;
            if (key == "S") rows = cols = m;
            if (key == "T" || key == "T1" || key == "T2") cols = m;
            d.operators.emplace(key, read_matrix(value, "/operators/" + key, rows, cols));
        }
    }

    if (root.contains("deformation")) {
        const json& def = root["deformation"];
        require_object(def, "/deformation");
        reject_unknown_keys(def, "/deformation", {"omega", "varpi"});
        const json& omega = member(def, "/deformation", "omega");
        require_object(omega, "/deformation/omega");
        reject_unknown_keys(omega, "/deformation/omega", {"dim", "basis", "brackets"});
        if (omega.contains("dim") && read_index(omega["dim"], "/deformation/omega/dim") != n)
            fail("/deformation/omega/dim", "expected " + std::to_string(n));
        Bracket w = omega.contains("brackets") ? read_brackets(omega["brackets"], "/deformation/omega/brackets", n)
                                               : Bracket(n);
        RepAction varpi = read_action(member(def, "/deformation", "varpi"), "/deformation/varpi", n, m);
        d.deformation = DeformationPair{std::move(w), std::move(varpi)};
    }

    if (root.contains("bivector")) {
        const json& bv = root["bivector"];
        require_object(bv, "/bivector");
        reject_unknown_keys(bv, "/bivector", {"pi_sharp"});
        Matrix p = read_matrix(member(bv, "/bivector", "pi_sharp"), "/bivector/pi_sharp", n, n);
        if (!p.is_antisymmetric()) fail("/bivector/pi_sharp", "pi_sharp must be antisymmetric");
        d.bivector = Bivector{std::move(p)};
    }

    if (root.contains("bilinear_form")) {
        const json& bf = root["bilinear_form"];
        require_object(bf, "/bilinear_form");
        reject_unknown_keys(bf, "/bilinear_form", {"gram", "b_sharp"});
        if (bf.contains("gram") == bf.contains("b_sharp"))
            fail("/bilinear_form", "exactly one of \"gram\" and \"b_sharp\" is required");
        if (bf.contains("gram")) {
            Matrix gm = read_matrix(bf["gram"], "/bilinear_form/gram", n, n);
            if (!gm.is_symmetric()) fail("/bilinear_form/gram", "must be symmetric");
            d.bilinear_form = BilinearForm{std::move(gm)};
        } else {
            Matrix bs = read_matrix(bf["b_sharp"], "/bilinear_form/b_sharp", n, n);
            if (!bs.is_symmetric()) fail("/bilinear_form/b_sharp", "must be symmetric");
            auto gm = invert(bs);
            if (!gm) fail("/bilinear_form/b_sharp", "must be invertible");
            d.bilinear_form = BilinearForm{std::move(*gm)};
            d.form_given_as_b_sharp = true;
        }
    }
    return d;
}

/// Throws ValidationError carrying the Jacobi witnesses.
inline LieAlgebra algebra(const Document& d) { return LieAlgebra(d.bracket, d.basis); }

/// Throws MissingStanza when absent, ValidationError when the axiom fails.
inline Representation representation(const Document& d, const LieAlgebra& g) {
    if (!d.representation) throw MissingStanza("representation");
    if (const auto* s = std::get_if<std::string>(&*d.representation))
        return *s == "ad" ? adjoint_rep(g) : coadjoint_rep(g);
    return Representation(g, std::get<RepAction>(*d.representation));
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json witness_json(const Witness& w) {
    json defect = std::visit([](const auto& x) { return to_json(x); }, w.defect);
    return json{{"condition", w.condition}, {"indices", w.indices}, {"defect", std::move(defect)}};
}

inline json certificate_json(const Certificate& c) {
    if (const auto* m = std::get_if<Matrix>(&c)) return to_json(*m);
    return brackets_json(std::get<Bracket>(c));
}

/// {kind, verdict, witnesses[], certificates{}}.
inline json report_json(const std::string& kind, const CheckReport& report,
                        const std::map<std::string, json>& certificates = {}) {
    json w = json::array();
    for (const auto& x : report.witnesses()) w.push_back(witness_json(x));
    json c = json::object();
    for (const auto& [k, v] : certificates) c[k] = v;
    return json{{"kind", kind}, {"verdict", report.holds()}, {"witnesses", std::move(w)}, {"certificates", std::move(c)}};
}

} // namespace liekn::io
