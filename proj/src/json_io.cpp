#include "setlim/json_io.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace setlim {

Json vector_to_json(const Vector& v) {
    if (!v.is_sparse()) return Json(v.coeffs());
    Json out = Json::object();
    for (const auto& [k, val] : v.entries()) out[k.str()] = val;
    return Json{{"sparse", out}};
}

Vector vector_from_json(const Json& j) {
    if (j.is_array()) return Vector::dense(j.get<std::vector<double>>());
    if (j.is_object() && j.contains("sparse")) {
        SparseEntries e;
        for (const auto& [k, val] : j.at("sparse").items()) e[BigInt(k)] = val.get<double>();
        return Vector::sparse(std::move(e));
    }
    throw std::invalid_argument("vector_from_json: bad shape");
}

Json set_to_json(const CompactSet& s) {
    Json out;
    switch (s.kind()) {
        case CompactSet::Kind::Cloud: {
            out["repr"] = "cloud";
            Json pts = Json::array();
            for (const auto& p : s.points()) pts.push_back(vector_to_json(p));
            out["points"] = std::move(pts);
            break;
        }
        case CompactSet::Kind::Polytope: {
            out["repr"] = "polytope";
            Json pts = Json::array();
            for (const auto& p : s.points()) pts.push_back(vector_to_json(p));
            out["vertices"] = std::move(pts);
            break;
        }
        case CompactSet::Kind::ESet: {
            out["repr"] = "esum";
            Json terms = Json::array();
            for (const auto& t : s.as_esum().terms) {
                terms.push_back(Json{{"weight", rational_to_string(t.weight)},
                                     {"lo", rational_to_string(t.lo)},
                                     {"hi", rational_to_string(t.hi)}});
            }
            out["terms"] = std::move(terms);
            break;
        }
    }
    return out;
}

CompactSet set_from_json(const Json& j) {
    const std::string repr = j.at("repr").get<std::string>();
    if (repr == "cloud" || repr == "polytope") {
        std::vector<Vector> pts;
        for (const auto& p : j.at(repr == "cloud" ? "points" : "vertices"))
            pts.push_back(vector_from_json(p));
        return repr == "cloud" ? CompactSet::cloud(std::move(pts))
                               : CompactSet::polytope(std::move(pts));
    }
    if (repr == "esum") {
        std::vector<ESumTerm> terms;
        for (const auto& t : j.at("terms")) {
            auto w = parse_rational(t.at("weight").get<std::string>());
            auto lo = parse_rational(t.at("lo").get<std::string>());
            auto hi = parse_rational(t.at("hi").get<std::string>());
            if (!w || !lo || !hi) throw std::invalid_argument("set_from_json: bad rational");
            terms.push_back(ESumTerm{*w, *lo, *hi});
        }
        return CompactSet::esum(std::move(terms));
    }
    throw std::invalid_argument("set_from_json: unknown repr '" + repr + "'");
}

Json tag_to_json(const Tag& t) {
    if (t.irrational) return Json{{"float", t.value}, {"irrational", true}};
    if (t.frac) return Json(t.frac->first.str() + "/" + t.frac->second.str());
    return Json{{"float", t.value}};
}

Json partition_to_json(const TaggedPartition& p) {
    Json bps = Json::array();
    for (const auto& b : p.breakpoints) bps.push_back(rational_to_string(b));
    Json tags = Json::array();
    for (const auto& t : p.tags) tags.push_back(tag_to_json(t));
    return Json{{"id", p.id}, {"breakpoints", std::move(bps)}, {"tags", std::move(tags)}};
}

Json space_to_json(const Space& s) {
    if (!s.is_dense()) return Json{{"mode", "sparse"}, {"p", "2"}};
    return Json{{"mode", "dense"}, {"dim", s.dim}, {"p", s.p.str()}};
}

Space space_from_json(const Json& j) {
    if (j.at("mode") == "sparse") return Space::sparse_l2();
    auto p = parse_rational(j.at("p").get<std::string>());
    if (j.at("p") == "inf") return Space::dense(j.at("dim").get<std::size_t>(), PExponent::inf());
    if (!p) throw std::invalid_argument("space_from_json: bad exponent");
    return Space::dense(j.at("dim").get<std::size_t>(), PExponent::of(*p));
}

Space parse_space(const std::string& spec) {
    if (spec == "sparse") return Space::sparse_l2();
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("space spec: '" + spec + "'");
    const std::string head = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (head == "l1" || head == "l2" || head == "linf") {
        std::size_t dim = std::stoul(rest);
        if (head == "l1") return Space::dense(dim, PExponent::of(1));
        if (head == "l2") return Space::dense(dim, PExponent::of(2));
        return Space::dense(dim, PExponent::inf());
    }
    if (head == "lp") {
        auto second = rest.find(':');
        if (second == std::string::npos) throw std::invalid_argument("space spec: '" + spec + "'");
        auto p = parse_rational(rest.substr(0, second));
        if (!p) throw std::invalid_argument("space spec: bad exponent in '" + spec + "'");
        return Space::dense(std::stoul(rest.substr(second + 1)), PExponent::of(*p));
    }
    throw std::invalid_argument("space spec: '" + spec + "'");
}

TaggedPartition parse_partition(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("partition spec: empty");
    if (parts[0] == "uniform") {
        if (parts.size() < 2) throw std::invalid_argument("partition spec: uniform:<n>[:rule]");
        std::size_t n = std::stoul(parts[1]);
        TagRule rule = TagRule::Mid;
        if (parts.size() >= 3) {
            if (parts[2] == "left") rule = TagRule::Left;
            else if (parts[2] == "right") rule = TagRule::Right;
            else if (parts[2] == "mid") rule = TagRule::Mid;
            else throw std::invalid_argument("partition spec: unknown tag rule '" + parts[2] + "'");
        }
        return uniform_partition(n, rule);
    }
    if (parts[0] == "prime") {
        if (parts.size() != 2) throw std::invalid_argument("partition spec: prime:<p>");
        return prime_partition(std::stoull(parts[1]));
    }
    if (parts[0] == "random") {
        if (parts.size() != 3) throw std::invalid_argument("partition spec: random:<diam>:<seed>");
        return random_partition(std::stod(parts[1]), std::stoull(parts[2]));
    }
    throw std::invalid_argument("partition spec: unknown kind '" + parts[0] + "'");
}

Json trace_to_json(const SumTrace& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries) {
        Json je{{"partition", e.partition_id}, {"diameter", e.diameter}, {"sum", set_to_json(e.sum)}};
        if (e.dist_prev) je["dist_prev"] = *e.dist_prev;
        if (e.dist_target) je["dist_target"] = *e.dist_target;
        entries.push_back(std::move(je));
    }
    return Json{{"lower_bound_metric", t.lower_bound_metric}, {"entries", std::move(entries)}};
}

Json estimate_to_json(const LimitEstimate& e) {
    return Json{{"verdict", verdict_name(e.verdict)},
                {"cauchy_tail", e.cauchy_tail},
                {"final_diameter", e.final_diameter},
                {"candidate", set_to_json(e.candidate)}};
}

Json probe_to_json(const ProbeReport& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        steps.push_back(Json{{"partition", s.partition_id},
                             {"diameter", s.diameter},
                             {"best_dist", s.best_dist},
                             {"best_so_far", s.best_so_far}});
    }
    return Json{{"reached", r.reached},
                {"final_dist", r.final_dist},
                {"reach_factor", r.reach_factor},
                {"steps", std::move(steps)}};
}

Json star_to_json(const StarReport& r) {
    Json probes = Json::array();
    for (const auto& p : r.probes) {
        probes.push_back(Json{{"candidate", p.candidate_index},
                              {"lambda", p.lambda},
                              {"report", probe_to_json(p.report)}});
    }
    return Json{{"all_reached", r.all_reached}, {"probes", std::move(probes)}};
}

Json certificate_to_json(const EmptyCertificate& c) {
    return Json{{"n_index", c.n_index},
                {"m_index", c.m_index},
                {"support_at_n", rational_to_string(c.support_at_n)},
                {"support_at_m", rational_to_string(c.support_at_m)},
                {"gap", rational_to_string(c.gap)},
                {"diameter_bound", rational_to_string(c.diameter_bound)},
                {"gap_value", to_double(c.gap)},
                {"bound_value", to_double(c.diameter_bound)},
                {"separating_bits", c.separating_bits},
                {"ok", c.ok}};
}

Json compare_to_json(const ConvCompareResult& c) {
    return Json{{"lhs_lb", c.lhs_lb},
                {"lhs_ub", c.lhs_ub},
                {"rhs", c.rhs},
                {"diameter", c.diameter},
                {"bound_m", c.bound_m},
                {"holds", c.lhs_ub <= c.rhs}};
}

Json infratype_to_json(const InfratypeEstimate& e) {
    return Json{{"p", e.p},
                {"c_hat", e.c_hat},
                {"trials", e.trials},
                {"n_max", e.n_max},
                {"seed", e.seed}};
}

Json support_sample_to_json(const SupportSample& s) {
    Json dirs = Json::array();
    for (const auto& d : s.directions) dirs.push_back(vector_to_json(d.v));
    return Json{{"directions", std::move(dirs)}, {"values", Json(s.values)}};
}

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string trace_to_csv(const SumTrace& t) {
    std::string out = "diameter,d_h\n";
    for (const auto& e : t.entries) {
        out += format_double(e.diameter);
        out += ",";
        out += e.dist_prev ? format_double(*e.dist_prev) : "";
        out += "\n";
    }
    return out;
}

std::string infratype_to_csv(const InfratypeEstimate& e) {
    std::string out = "trial,n,ratio\n";
    for (const auto& s : e.samples) {
        out += std::to_string(s.trial);
        out += ",";
        out += std::to_string(s.n);
        out += ",";
        out += format_double(s.ratio);
        out += "\n";
    }
    return out;
}

std::string support_sample_to_csv(const SupportSample& s) {
    std::string out = "angle,value\n";
    for (std::size_t i = 0; i < s.directions.size(); ++i) {
        const auto& v = s.directions[i].v;
        if (v.is_sparse() || v.dense_dim() != 2)
            throw std::invalid_argument("support_sample_to_csv: planar directions only");
        out += format_double(std::atan2(v.coeffs()[1], v.coeffs()[0]));
        out += ",";
        out += format_double(s.values[i]);
        out += "\n";
    }
    return out;
}

}  // namespace setlim
