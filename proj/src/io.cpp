#include "fluxlim/io.hpp"

#include <cstdio>

#include "fluxlim/transport.hpp"

namespace fluxlim {

std::string csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << fields[i];
    }
    out << '\n';
}

json to_json(const State& s) { return json{{"rho", s.rho}, {"u", s.u}}; }

json to_json(const FluxParams& p) { return json{{"eps1", p.eps1}, {"eps2", p.eps2}, {"gamma", p.gamma}}; }

json to_json(const Wave& w) {
    json j;
    j["kind"] = wave_kind(w);
    if (const auto* s = std::get_if<Shock>(&w)) {
        j["family"] = s->family;
        j["speed"] = s->speed;
        j["left"] = to_json(s->left);
        j["right"] = to_json(s->right);
    } else if (const auto* r = std::get_if<Rarefaction>(&w)) {
        j["family"] = r->family;
        j["xi_left"] = r->xi_left;
        j["xi_right"] = r->xi_right;
        j["anchor"] = to_json(r->anchor);
    } else if (const auto* c = std::get_if<Contact>(&w)) {
        j["speed"] = c->speed;
    } else if (const auto* d = std::get_if<DeltaShock>(&w)) {
        j["sigma"] = d->sigma;
        j["w_rate"] = d->geometric_weight_rate();
        j["weight_rate_mass"] = d->weight_rate_mass;
        j["weight_rate_momentum"] = d->weight_rate_momentum;
    } else if (const auto* v = std::get_if<VacuumFan>(&w)) {
        j["xi_left"] = v->xi_left;
        j["xi_right"] = v->xi_right;
    } else if (const auto* f = std::get_if<ConstantDensityFan>(&w)) {
        j["xi_left"] = f->xi_left;
        j["xi_right"] = f->xi_right;
        j["rho"] = f->rho;
    }
    return j;
}

json solution_to_json(const RiemannSolution& sol, const json& diagnostics) {
    json waves = json::array();
    for (const Wave& w : sol.waves) waves.push_back(to_json(w));
    json middles = json::array();
    for (const State& s : sol.middles) middles.push_back(to_json(s));
    return json{{"system", to_string(sol.system)},
                {"params", to_json(sol.params)},
                {"left", to_json(sol.left)},
                {"right", to_json(sol.right)},
                {"waves", waves},
                {"middles", middles},
                {"diagnostics", diagnostics}};
}

namespace {

State state_from(const json& j) { return {j.at("rho").get<double>(), j.at("u").get<double>()}; }

Wave wave_from(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "shock") {
        return Shock{j.at("family").get<int>(), j.at("speed").get<double>(), state_from(j.at("left")),
                     state_from(j.at("right"))};
    }
    if (kind == "rarefaction") {
        return Rarefaction{j.at("family").get<int>(), j.at("xi_left").get<double>(),
                           j.at("xi_right").get<double>(), state_from(j.at("anchor"))};
    }
    if (kind == "contact") return Contact{j.at("speed").get<double>()};
    if (kind == "delta_shock") {
        return DeltaShock{j.at("sigma").get<double>(), j.at("weight_rate_mass").get<double>(),
                          j.at("weight_rate_momentum").get<double>()};
    }
    if (kind == "vacuum_fan") return VacuumFan{j.at("xi_left").get<double>(), j.at("xi_right").get<double>()};
    if (kind == "constant_density_fan") {
        return ConstantDensityFan{j.at("xi_left").get<double>(), j.at("xi_right").get<double>(),
                                  j.at("rho").get<double>()};
    }
    throw ValidationError("unknown wave kind '" + kind + "'");
}

}  // namespace

RiemannSolution solution_from_json(const json& j) {
    try {
        RiemannSolution sol;
        sol.system = system_from_string(j.at("system").get<std::string>());
        const json& p = j.at("params");
        sol.params = {p.at("eps1").get<double>(), p.at("eps2").get<double>(), p.at("gamma").get<double>()};
        sol.left = state_from(j.at("left"));
        sol.right = state_from(j.at("right"));
        for (const json& w : j.at("waves")) sol.waves.push_back(wave_from(w));
        for (const json& m : j.at("middles")) sol.middles.push_back(state_from(m));
        return sol;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed solution JSON: ") + e.what());
    }
}

void write_solution_csv(std::ostream& out, const RiemannSolution& sol) {
    write_csv_row(out, {"wave", "kind", "family", "xi_left", "xi_right", "rho_left", "u_left", "rho_right",
                        "u_right", "w_rate", "weight_rate_mass", "weight_rate_momentum"});
    for (std::size_t i = 0; i < sol.waves.size(); ++i) {
        const Wave& w = sol.waves[i];
        const auto [lo, hi] = wave_extent(w);
        const State& before = sol.state_before(i);
        const State& after = sol.state_after(i);
        std::string family, w_rate, mass, momentum;
        if (const auto* s = std::get_if<Shock>(&w)) family = std::to_string(s->family);
        if (const auto* r = std::get_if<Rarefaction>(&w)) family = std::to_string(r->family);
        if (const auto* d = std::get_if<DeltaShock>(&w)) {
            w_rate = csv_number(d->geometric_weight_rate());
            mass = csv_number(d->weight_rate_mass);
            momentum = csv_number(d->weight_rate_momentum);
        }
        write_csv_row(out, {std::to_string(i), wave_kind(w), family, csv_number(lo), csv_number(hi),
                            csv_number(before.rho), csv_number(before.u), csv_number(after.rho),
                            csv_number(after.u), w_rate, mass, momentum});
    }
}

}  // namespace fluxlim
