#include "statcert/problem.hpp"

#include <json.hpp>

#include "statcert/errors.hpp"

namespace statcert {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& where) {
    if (!j.is_string())
        throw InputError(where + ": rationals must be written as strings");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

RVector vector_field(const json& j, long n, const std::string& where) {
    if (!j.is_array() || static_cast<long>(j.size()) != n)
        throw InputError(where + ": expected an array of length " + std::to_string(n));
    RVector v(n);
    for (long k = 0; k < n; ++k) v(k) = rational_field(j[k], where);
    return v;
}

RMatrix matrix_field(const json& j, long n, const std::string& where) {
    if (!j.is_array() || static_cast<long>(j.size()) != n)
        throw InputError(where + ": expected an n x n matrix");
    RMatrix m(n, n);
    for (long r = 0; r < n; ++r) m.row(r) = vector_field(j[r], n, where).transpose();
    return m;
}

FunctionData function_field(const json& j, long n, const std::string& fallback_name) {
    if (!j.is_object()) throw InputError(fallback_name + ": expected an object");
    FunctionData fd;
    fd.name = j.value("name", fallback_name);
    if (!j.contains("value")) throw InputError(fd.name + ": missing value");
    fd.value = rational_field(j.at("value"), fd.name + " value");
    if (!j.contains("gradient")) throw InputError(fd.name + ": missing gradient");
    fd.gradient = vector_field(j.at("gradient"), n, fd.name + " gradient");
    if (j.contains("hessian")) fd.hessian = matrix_field(j.at("hessian"), n, fd.name + " hessian");
    fd.affine = j.value("affine", false);
    return fd;
}

std::vector<FunctionData> function_block(const json& root, const std::string& key, long n) {
    std::vector<FunctionData> out;
    if (!root.contains(key)) return out;
    const json& j = root.at(key);
    if (!j.is_array()) throw InputError("block " + key + " must be an array");
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(function_field(j[i], n, key + std::to_string(i + 1)));
    return out;
}

SymbolicFunction symbolic_field(const json& j, long n, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object");
    SymbolicFunction s;
    if (j.contains("terms")) {
        for (const json& t : j.at("terms")) {
            PolyTerm term;
            term.coeff = rational_field(t.at("coeff"), where + " coeff");
            if (!t.contains("powers") || !t.at("powers").is_array() ||
                static_cast<long>(t.at("powers").size()) != n)
                throw InputError(where + ": powers must list one exponent per variable");
            for (const json& p : t.at("powers")) {
                if (!p.is_number_integer() || p.get<long>() < 0)
                    throw InputError(where + ": exponents must be nonnegative integers");
                term.powers.push_back(p.get<long>());
            }
            s.terms.push_back(std::move(term));
        }
    }
    if (j.contains("abspow")) {
        const json& a = j.at("abspow");
        const long var = a.at("var").get<long>();
        if (var < 1 || var > n) throw InputError(where + ": abspow variable out of range");
        s.abspow_var = var - 1;
        s.abspow_coeff = rational_field(a.at("coeff"), where + " abspow coeff");
    }
    return s;
}

std::vector<SymbolicFunction> symbolic_block(const json& root, const std::string& key, long n,
                                             std::size_t expected) {
    std::vector<SymbolicFunction> out;
    const json& j = root.contains(key) ? root.at(key) : json::array();
    if (!j.is_array() || j.size() != expected)
        throw InputError("symbolic block " + key + " must match the function count");
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(symbolic_field(j[i], n, "symbolic " + key + std::to_string(i + 1)));
    return out;
}

RVector poly_gradient(const SymbolicFunction& s, const RVector& x) {
    const long n = x.size();
    RVector grad = RVector::Zero(n);
    for (const PolyTerm& t : s.terms) {
        for (long j = 0; j < n; ++j) {
            if (t.powers[j] == 0) continue;
            Rational part = t.coeff * t.powers[j];
            for (long k = 0; k < n; ++k) {
                long e = t.powers[k] - (k == j ? 1 : 0);
                for (long c = 0; c < e; ++c) part *= x(k);
            }
            grad(j) += part;
        }
    }
    return grad;
}

// Compare the symbolic value and gradient at the candidate point against
// the frozen local data.  The abspow term contributes |x_i|^(3/2) and
// (3/2) sign(x_i) |x_i|^(1/2) per coordinate; the check is skipped when
// those leave the rationals.
void check_symbolic(const SymbolicFunction& s, const FunctionData& fd, const RVector& x) {
    Rational value = poly_value(s, x);
    RVector grad = poly_gradient(s, x);
    if (s.has_abspow()) {
        const Rational t = x(*s.abspow_var);
        const std::optional<Rational> root = exact_sqrt(abs(t));
        if (!root) return;
        value += s.abspow_coeff * abs(t) * *root;
        grad(*s.abspow_var) += s.abspow_coeff * Rational(3, 2) * sign(t) * *root;
    }
    if (value != fd.value)
        throw InputError(fd.name + ": symbolic value disagrees with the stored value");
    if (!vec_equal(grad, fd.gradient))
        throw InputError(fd.name + ": symbolic gradient disagrees with the stored gradient");
}

json rational_json(const Rational& v) { return format_rational(v); }

json vector_json(const RVector& v) {
    json out = json::array();
    for (long k = 0; k < v.size(); ++k) out.push_back(rational_json(v(k)));
    return out;
}

json function_json(const FunctionData& fd) {
    json out;
    if (!fd.name.empty()) out["name"] = fd.name;
    out["value"] = rational_json(fd.value);
    out["gradient"] = vector_json(fd.gradient);
    if (fd.hessian) {
        json rows = json::array();
        for (long r = 0; r < fd.hessian->rows(); ++r)
            rows.push_back(vector_json(fd.hessian->row(r).transpose()));
        out["hessian"] = rows;
    }
    out["affine"] = fd.affine;
    return out;
}

json symbolic_json(const SymbolicFunction& s) {
    json out;
    json terms = json::array();
    for (const PolyTerm& t : s.terms) {
        json term;
        term["coeff"] = rational_json(t.coeff);
        term["powers"] = t.powers;
        terms.push_back(term);
    }
    out["terms"] = terms;
    if (s.has_abspow()) {
        out["abspow"] = {{"var", *s.abspow_var + 1}, {"coeff", rational_json(s.abspow_coeff)}};
    }
    return out;
}

}  // namespace

Rational poly_value(const SymbolicFunction& s, const RVector& x) {
    Rational value = 0;
    for (const PolyTerm& t : s.terms) {
        Rational part = t.coeff;
        for (long k = 0; k < x.size(); ++k)
            for (long c = 0; c < t.powers[k]; ++c) part *= x(k);
        value += part;
    }
    return value;
}

std::optional<Rational> symbolic_value(const SymbolicFunction& s, const RVector& x) {
    Rational value = poly_value(s, x);
    if (!s.has_abspow() || s.abspow_coeff == 0) return value;
    const Rational t = abs(x(*s.abspow_var));
    const std::optional<Rational> root = exact_sqrt(t);
    if (!root) return std::nullopt;
    return value + s.abspow_coeff * t * *root;
}

Problem parse_problem(const std::string& bytes) {
    json root;
    try {
        root = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw InputError("problem file must be a JSON object");
    if (root.value("schema_version", 0) != 1)
        throw InputError("unsupported schema_version, expected 1");

    Problem p;
    p.name = root.value("name", "");
    if (!root.contains("n") || !root.at("n").is_number_integer())
        throw InputError("missing ambient dimension n");
    p.point.n = root.at("n").get<long>();
    if (p.point.n < 1) throw InputError("ambient dimension must be positive");
    if (!root.contains("x")) throw InputError("missing candidate point x");
    p.point.x = vector_field(root.at("x"), p.point.n, "x");
    if (!root.contains("objective")) throw InputError("missing objective");
    p.point.f = function_field(root.at("objective"), p.point.n, "f");
    p.point.g = function_block(root, "g", p.point.n);
    p.point.h = function_block(root, "h", p.point.n);
    p.point.G = function_block(root, "G", p.point.n);
    p.point.H = function_block(root, "H", p.point.n);
    validate(p.point);

    if (root.contains("symbolic")) {
        const json& sym = root.at("symbolic");
        if (!sym.is_object()) throw InputError("symbolic block must be an object");
        SymbolicProblem sp;
        if (!sym.contains("objective")) throw InputError("symbolic block is missing the objective");
        sp.f = symbolic_field(sym.at("objective"), p.point.n, "symbolic f");
        sp.g = symbolic_block(sym, "g", p.point.n, p.point.g.size());
        sp.h = symbolic_block(sym, "h", p.point.n, p.point.h.size());
        sp.G = symbolic_block(sym, "G", p.point.n, p.point.G.size());
        sp.H = symbolic_block(sym, "H", p.point.n, p.point.H.size());

        check_symbolic(sp.f, p.point.f, p.point.x);
        for (std::size_t i = 0; i < sp.g.size(); ++i)
            check_symbolic(sp.g[i], p.point.g[i], p.point.x);
        for (std::size_t i = 0; i < sp.h.size(); ++i)
            check_symbolic(sp.h[i], p.point.h[i], p.point.x);
        for (std::size_t i = 0; i < sp.G.size(); ++i)
            check_symbolic(sp.G[i], p.point.G[i], p.point.x);
        for (std::size_t i = 0; i < sp.H.size(); ++i)
            check_symbolic(sp.H[i], p.point.H[i], p.point.x);
        p.symbolic = std::move(sp);
    }
    return p;
}

std::string serialize_problem(const Problem& p) {
    json root;
    root["schema_version"] = 1;
    if (!p.name.empty()) root["name"] = p.name;
    root["n"] = p.point.n;
    root["x"] = vector_json(p.point.x);
    root["objective"] = function_json(p.point.f);
    auto block = [](const std::vector<FunctionData>& fns) {
        json out = json::array();
        for (const FunctionData& fd : fns) out.push_back(function_json(fd));
        return out;
    };
    if (!p.point.g.empty()) root["g"] = block(p.point.g);
    if (!p.point.h.empty()) root["h"] = block(p.point.h);
    if (!p.point.G.empty()) root["G"] = block(p.point.G);
    if (!p.point.H.empty()) root["H"] = block(p.point.H);
    if (p.symbolic) {
        json sym;
        sym["objective"] = symbolic_json(p.symbolic->f);
        auto sblock = [](const std::vector<SymbolicFunction>& fns) {
            json out = json::array();
            for (const SymbolicFunction& s : fns) out.push_back(symbolic_json(s));
            return out;
        };
        sym["g"] = sblock(p.symbolic->g);
        sym["h"] = sblock(p.symbolic->h);
        sym["G"] = sblock(p.symbolic->G);
        sym["H"] = sblock(p.symbolic->H);
        root["symbolic"] = sym;
    }
    return root.dump(2) + "\n";
}

}  // namespace statcert
