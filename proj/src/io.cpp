#include "latmem/io.hpp"

#include <json.hpp>

namespace latmem {

namespace {

using nlohmann::json;

Rat parse_entry(const json& v, const char* where) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_rat(v.get<std::string>());
    throw ContractError(std::string("expected integer or \"p/q\" string in ") + where);
}

Int parse_int_entry(const json& v, const char* where) {
    Rat q = parse_entry(v, where);
    if (!is_integer(q)) throw ContractError(std::string("expected an integer in ") + where);
    return q.get_num();
}

RatMatrix parse_matrix_rows(const json& rows, const char* where) {
    if (!rows.is_array() || rows.empty())
        throw ContractError(std::string("expected a nonempty array of rows in ") + where);
    std::size_t ncols = rows[0].size();
    RatMatrix m(rows.size(), ncols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != ncols)
            throw ContractError(std::string("ragged matrix in ") + where);
        for (std::size_t j = 0; j < ncols; ++j) m(i, j) = parse_entry(rows[i][j], where);
    }
    return m;
}

IntMatrix parse_int_matrix_rows(const json& rows, const char* where) {
    RatMatrix m = parse_matrix_rows(rows, where);
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j)))
                throw ContractError(std::string("expected integer entries in ") + where);
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

IntVector parse_int_vector(const json& arr, const char* where) {
    if (!arr.is_array()) throw ContractError(std::string("expected an array in ") + where);
    IntVector v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) v[i] = parse_int_entry(arr[i], where);
    return v;
}

RatVector parse_rat_vector(const json& arr, const char* where) {
    if (!arr.is_array()) throw ContractError(std::string("expected an array in ") + where);
    RatVector v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) v[i] = parse_entry(arr[i], where);
    return v;
}

NormSpec parse_norm(const json& n) {
    if (n.contains("infinity")) return NormSpec::linf();
    if (n.contains("lp")) {
        long p = n["lp"].get<long>();
        if (p < 1) throw ContractError("norm.lp must be >= 1");
        return NormSpec::lp((unsigned long)p);
    }
    if (n.contains("polyhedral")) {
        const json& ph = n["polyhedral"];
        return NormSpec::polyhedral(parse_int_matrix_rows(ph.at("A"), "norm.polyhedral.A"),
                                    parse_int_vector(ph.at("beta"), "norm.polyhedral.beta"));
    }
    throw ContractError("norm must be one of lp / infinity / polyhedral");
}

ConvexBody parse_body(const json& b) {
    if (b.contains("polytope")) {
        const json& pj = b["polytope"];
        return Polytope(parse_int_matrix_rows(pj.at("A"), "body.polytope.A"),
                        parse_int_vector(pj.at("b"), "body.polytope.b"));
    }
    if (b.contains("lp_body")) {
        const json& lj = b["lp_body"];
        long p = lj.at("p").get<long>();
        RatMatrix v_inv = parse_matrix_rows(lj.at("v_inv"), "body.lp_body.v_inv");
        RatVector t = parse_rat_vector(lj.at("t"), "body.lp_body.t");
        std::size_t m = t.size();
        if (lj.contains("m")) m = lj["m"].get<std::size_t>();
        if (lj.contains("alpha")) {
            Rat alpha = parse_entry(lj["alpha"], "body.lp_body.alpha");
            return LpBody::from_radius((unsigned long)p, std::move(v_inv), std::move(t), alpha, m);
        }
        Rat ap = parse_entry(lj.at("alpha_pow"), "body.lp_body.alpha_pow");
        return LpBody((unsigned long)p, std::move(v_inv), std::move(t), ap.get_num(),
                      ap.get_den(), m);
    }
    throw ContractError("body must be a polytope or an lp_body");
}

json vector_to_json(const IntVector& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.get_str());
    return arr;
}

json vector_to_json(const RatVector& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(rat_to_string(x));
    return arr;
}

json stats_to_json(const MembershipStats& st) {
    return json{{"recursive_calls", st.recursive_calls},
                {"flatness_calls", st.flatness_calls},
                {"max_coeff_bits", st.max_coeff_bits}};
}

IntMatrix require_integer_lattice(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j)))
                throw ContractError("cvp requires an integer lattice basis");
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ContractError(std::string("malformed JSON: ") + e.what());
    }
    try {
        Instance inst;
        std::string kind = doc.at("kind").get<std::string>();
        if (kind == "cvp")
            inst.kind = Instance::Kind::Cvp;
        else if (kind == "lmp")
            inst.kind = Instance::Kind::Lmp;
        else if (kind == "svp")
            inst.kind = Instance::Kind::Svp;
        else
            throw ContractError("kind must be cvp, lmp, or svp");

        // basis vectors arrive as rows of the JSON array; stored as columns
        inst.lattice = parse_matrix_rows(doc.at("lattice"), "lattice").transposed();
        if (inst.kind == Instance::Kind::Cvp) {
            inst.target = parse_int_vector(doc.at("target"), "target");
            inst.norm = parse_norm(doc.at("norm"));
            if (inst.target.size() != inst.lattice.rows())
                throw ContractError("target dimension does not match the lattice");
        }
        if (inst.kind == Instance::Kind::Lmp) {
            inst.body = parse_body(doc.at("body"));
            if (body_active_dim(*inst.body) != inst.lattice.rows())
                throw ContractError("body dimension does not match the lattice");
        }
        return inst;
    } catch (const json::exception& e) {
        throw ContractError(std::string("instance schema: ") + e.what());
    }
}

std::string run_instance(const Instance& inst, const RunOptions& opts) {
    MembershipConfig cfg;
    cfg.no_replacement = opts.no_replacement;
    cfg.max_dimension = opts.max_dimension;
    cfg.rounding_bits = opts.rounding_bits;

    json out;
    out["schema"] = 1;
    MembershipStats st;

    switch (inst.kind) {
        case Instance::Kind::Cvp: {
            IntMatrix basis = require_integer_lattice(inst.lattice);
            if (opts.force_oracle) {
                OracleCvpResult r = oracle_cvp(basis, to_rat(inst.target), *inst.norm);
                out["answer"] = {{"closest", vector_to_json(r.closest)},
                                 {"distance_pow", rat_to_string(r.distance_pow)}};
            } else {
                if (basis.rows() > opts.max_dimension)
                    throw DimensionLimit(basis.rows(), opts.max_dimension);
                CvpResult r = cvp_search(basis, inst.target, *inst.norm, cfg, &st);
                out["answer"] = {{"closest", vector_to_json(r.closest)},
                                 {"distance_pow", rat_to_string(r.distance_pow)}};
            }
            break;
        }
        case Instance::Kind::Lmp: {
            LatticeBasis lattice(inst.lattice);
            bool ans = opts.force_oracle ? oracle_lmp(*inst.body, lattice)
                                         : lmp_solve(*inst.body, lattice, cfg, &st);
            out["answer"] = ans;
            break;
        }
        case Instance::Kind::Svp: {
            LatticeBasis lattice(inst.lattice);
            ShortestFormVector sv = shortest_form_vector(gram(lattice.b));
            RatVector ambient = lattice.b * to_rat(sv.d);
            out["answer"] = {{"shortest_sq", rat_to_string(sv.value)},
                             {"vector", vector_to_json(ambient)}};
            break;
        }
    }
    out["stats"] = stats_to_json(st);
    return out.dump();
}

bool check_instance(const Instance& inst, const RunOptions& opts, std::string* report) {
    json rep;
    bool agree = true;
    MembershipConfig cfg;
    cfg.no_replacement = opts.no_replacement;
    cfg.max_dimension = opts.max_dimension;
    cfg.rounding_bits = opts.rounding_bits;

    switch (inst.kind) {
        case Instance::Kind::Cvp: {
            IntMatrix basis = require_integer_lattice(inst.lattice);
            CvpResult fast = cvp_search(basis, inst.target, *inst.norm, cfg);
            OracleCvpResult slow = oracle_cvp(basis, to_rat(inst.target), *inst.norm);
            agree = fast.distance_pow == slow.distance_pow;
            rep["algorithm"] = rat_to_string(fast.distance_pow);
            rep["oracle"] = rat_to_string(slow.distance_pow);
            break;
        }
        case Instance::Kind::Lmp: {
            LatticeBasis lattice(inst.lattice);
            bool fast = lmp_solve(*inst.body, lattice, cfg);
            bool slow = oracle_lmp(*inst.body, lattice);
            agree = fast == slow;
            rep["algorithm"] = fast;
            rep["oracle"] = slow;
            break;
        }
        case Instance::Kind::Svp: {
            // no separate oracle path: verify the witness value matches
            LatticeBasis lattice(inst.lattice);
            ShortestFormVector sv = shortest_form_vector(gram(lattice.b));
            RatVector ambient = lattice.b * to_rat(sv.d);
            agree = norm2_sq(ambient) == sv.value;
            rep["shortest_sq"] = rat_to_string(sv.value);
            break;
        }
    }
    rep["agree"] = agree;
    if (report) *report = rep.dump();
    return agree;
}

}  // namespace latmem
