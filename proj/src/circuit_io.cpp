#include "json.hpp"

#include "nsimon/circuit_io.hpp"

namespace nsimon {

std::string circuit_to_json(const Circuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& g : c.gates()) {
        nlohmann::json e;
        switch (g.kind) {
            case GateKind::H: e["gate"] = "H"; break;
            case GateKind::X: e["gate"] = "X"; break;
            case GateKind::CNOT:
                e["gate"] = "CNOT";
                e["control"] = g.control;
                break;
        }
        e["target"] = g.target;
        gates.push_back(std::move(e));
    }
    nlohmann::json j;
    j["width"] = c.width();
    j["gates"] = std::move(gates);
    j["measured"] = c.measured();
    return j.dump(2);
}

Circuit parse_circuit_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        Circuit c(j.at("width").get<int>());
        for (const auto& e : j.at("gates")) {
            const auto kind = e.at("gate").get<std::string>();
            const int t = e.at("target").get<int>();
            if (kind == "H") {
                c.h(t);
            } else if (kind == "X") {
                c.x(t);
            } else if (kind == "CNOT") {
                c.cnot(e.at("control").get<int>(), t);
            } else {
                throw ParseError("unknown gate '" + kind + "'");
            }
        }
        c.measure(j.value("measured", std::vector<int>{}));
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("circuit json: ") + e.what());
    }
}

}  // namespace nsimon
