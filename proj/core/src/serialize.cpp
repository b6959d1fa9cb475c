#include "sjb/serialize.hpp"

#include <json.hpp>

#include <stdexcept>

namespace sjb {

using json = nlohmann::ordered_json;

namespace {

json spec_to_json(const PosetSpec& spec) {
    json out;
    out["n"] = spec.n();
    out["bounds"] = spec.bounds();
    out["boolean"] = spec.is_boolean();
    return out;
}

json vector_to_json(const PosetSpec& spec, const PosetVector& v, int rank) {
    json out;
    out["rank"] = rank;
    json terms = json::array();
    for (const auto& t : v.terms()) {
        json jt;
        jt["point"] = spec.decode(t.point);
        jt["coeff_num"] = t.coeff.get_num().get_str();
        jt["coeff_den"] = t.coeff.get_den().get_str();
        terms.push_back(std::move(jt));
    }
    out["terms"] = std::move(terms);
    return out;
}

} // namespace

std::string sjb_to_json(const SymmetricJordanBasis& sjb, int indent) {
    json out;
    out["spec"] = spec_to_json(sjb.spec);
    json chains = json::array();
    auto order = sjb.sorted_order();
    int cur_k = -1, b = 0;
    for (std::size_t oi : order) {
        const auto& chain = sjb.chains[oi];
        if (chain.start_rank != cur_k) {
            cur_k = chain.start_rank;
            b = 0;
        }
        ++b;
        json jc;
        jc["k"] = chain.start_rank;
        jc["b"] = b;
        json vectors = json::array();
        for (int i = 0; i < chain.length(); ++i)
            vectors.push_back(vector_to_json(sjb.spec, chain.vectors[static_cast<std::size_t>(i)],
                                             chain.start_rank + i));
        jc["vectors"] = std::move(vectors);
        chains.push_back(std::move(jc));
    }
    out["chains"] = std::move(chains);
    return out.dump(indent) + "\n";
}

SymmetricJordanBasis sjb_from_json(const std::string& text) {
    json in = json::parse(text);
    std::vector<int> bounds = in.at("spec").at("bounds").get<std::vector<int>>();
    PosetSpec spec(bounds);
    SymmetricJordanBasis sjb{spec, {}};
    for (const auto& jc : in.at("chains")) {
        JordanChain chain;
        chain.start_rank = jc.at("k").get<int>();
        for (const auto& jv : jc.at("vectors")) {
            std::vector<Term> terms;
            for (const auto& jt : jv.at("terms")) {
                std::vector<int> coords = jt.at("point").get<std::vector<int>>();
                mpz_class num(jt.at("coeff_num").get<std::string>());
                mpz_class den(jt.at("coeff_den").get<std::string>());
                if (den == 0)
                    throw std::invalid_argument("sjb_from_json: zero denominator");
                Rational c(num, den);
                c.canonicalize();
                terms.push_back({spec.encode(coords), std::move(c)});
            }
            chain.vectors.push_back(PosetVector::from_terms(std::move(terms)));
        }
        sjb.chains.push_back(std::move(chain));
    }
    return sjb;
}

std::string report_to_json(const std::string& subject, const VerificationReport& rep,
                           int indent) {
    json out;
    out["subject"] = subject;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty())
            jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    out["pass"] = rep.all_pass();
    return out.dump(indent) + "\n";
}

std::string blocks_to_json(const BlockImage& image, int indent) {
    json out;
    out["n"] = image.n;
    out["i"] = image.i;
    out["j"] = image.j;
    out["t"] = image.t;
    json blocks = json::array();
    for (const auto& b : image.blocks) {
        json jb;
        jb["k"] = b.k;
        jb["p_k"] = b.p_k;
        if (b.eligible) {
            jb["row"] = image.i;
            jb["col"] = image.j;
            json entry;
            entry["coeff_num"] = b.entry.coefficient().get_num().get_str();
            entry["coeff_den"] = b.entry.coefficient().get_den().get_str();
            entry["radicand"] = b.entry.radicand().get_str();
            jb["entry"] = std::move(entry);
        } else {
            jb["zero"] = true;
        }
        blocks.push_back(std::move(jb));
    }
    out["blocks"] = std::move(blocks);
    return out.dump(indent) + "\n";
}

std::string gz_to_json(int n, const GzResult& gz, int indent) {
    json out;
    out["n"] = n;
    json chains = json::array();
    for (const auto& cw : gz.table) {
        json jc;
        jc["k"] = cw.k;
        jc["b"] = cw.b;
        jc["weights"] = cw.weights;
        chains.push_back(std::move(jc));
    }
    out["chains"] = std::move(chains);
    json checks = json::array();
    for (const auto& c : gz.report.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty())
            jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    out["pass"] = gz.report.all_pass();
    return out.dump(indent) + "\n";
}

std::string dims_to_json(const DimsTable& dims, int indent) {
    json out;
    out["n"] = dims.n;
    out["p"] = dims.p;
    json q = json::array();
    for (const auto& v : dims.q)
        q.push_back(v.get_str());
    out["q"] = std::move(q);
    out["sum_p_sq"] = dims.sum_p_sq.get_str();
    out["binom_n3_3"] = dims.binom_n3_3.get_str();
    out["sum_pq"] = dims.sum_pq.get_str();
    out["two_n"] = dims.two_n.get_str();
    out["identities_hold"] = dims.identities_hold();
    return out.dump(indent) + "\n";
}

} // namespace sjb
