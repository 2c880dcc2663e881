#include "ordpath/certificate.hpp"

namespace ordpath {

nlohmann::ordered_json to_json(const Certificate& c) {
    nlohmann::ordered_json j{{"claim", c.claim},
                             {"parameters", c.parameters},
                             {"value", c.value},
                             {"verified", c.verified}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    return j;
}

Certificate certificate_from_json(const nlohmann::ordered_json& j) {
    Certificate c;
    c.claim = j.at("claim").get<std::string>();
    c.parameters = j.at("parameters");
    c.value = j.at("value");
    c.verified = j.at("verified").get<bool>();
    if (j.contains("counterexample")) c.counterexample = j.at("counterexample");
    return c;
}

} // namespace ordpath
