#include "rental/config.hpp"

#include <json.hpp>

namespace rental {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& ex) {
        raise(ErrorKind::config, std::string(what) + ": invalid json: " + ex.what());
    }
}

double need_number(const json& j, const char* path) {
    require(j.contains(path), ErrorKind::config,
            std::string("missing field '") + path + "'");
    require(j.at(path).is_number(), ErrorKind::config,
            std::string("field '") + path + "' must be a number");
    return j.at(path).get<double>();
}

} // namespace

Distribution distribution_from_json(const std::string& text) {
    const json j = parse(text, "distribution");
    require(j.is_object() && j.contains("kind"), ErrorKind::config,
            "distribution: need an object with a 'kind' field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "uniform") {
        return Distribution::uniform(need_number(j, "lo"), need_number(j, "hi"));
    }
    if (kind == "grid") {
        require(j.contains("cdf_points") && j.at("cdf_points").is_array(), ErrorKind::config,
                "distribution: grid kind needs a 'cdf_points' array");
        std::vector<std::array<double, 2>> pts;
        for (const auto& p : j.at("cdf_points")) {
            require(p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number(),
                    ErrorKind::config, "distribution: cdf_points entries must be [v, F] pairs");
            pts.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        std::size_t m = 10000;
        if (j.contains("quantile_grid")) m = j.at("quantile_grid").get<std::size_t>();
        return Distribution::from_cdf_points(pts, m);
    }
    raise(ErrorKind::config, "distribution: kind must be 'uniform' or 'grid', got '" + kind + "'");
}

std::string distribution_to_json(const Distribution& d) {
    json j;
    if (d.kind() == Distribution::Kind::uniform) {
        j["kind"] = "uniform";
        j["lo"] = d.lo();
        j["hi"] = d.hi();
    } else {
        j["kind"] = "grid";
        json pts = json::array();
        const int k = 64;
        for (int i = 0; i <= k; ++i) {
            const double q = static_cast<double>(i) / k;
            pts.push_back({d.quantile(q), q});
        }
        j["cdf_points"] = pts;
    }
    return j.dump();
}

RewardFn reward_from_json(const std::string& text) {
    const json j = parse(text, "reward");
    require(j.is_object() && j.contains("class"), ErrorKind::config,
            "reward: need an object with a 'class' field");
    const std::string cls = j.at("class").get<std::string>();
    if (cls == "linear") {
        const double alpha = need_number(j, "alpha");
        double beta = need_number(j, "beta");
        if (j.contains("tradeoff")) {
            const std::string t = j.at("tradeoff").get<std::string>();
            if (t == "negative") {
                require(beta > 0.0, ErrorKind::config,
                        "reward: tradeoff 'negative' expects a positive beta "
                        "(the alpha v - beta p form)");
                beta = -beta;
            } else {
                require(t == "positive", ErrorKind::config,
                        "reward: tradeoff must be 'positive' or 'negative'");
            }
        }
        return RewardFn::linear(alpha, beta);
    }
    if (cls == "welfare") {
        require(j.contains("f_points") && j.at("f_points").is_array(), ErrorKind::config,
                "reward: welfare class needs an 'f_points' array");
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : j.at("f_points")) {
            require(p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number(),
                    ErrorKind::config, "reward: f_points entries must be [v, f] pairs");
            pts.emplace_back(p[0].get<double>(), p[1].get<double>());
        }
        return RewardFn::welfare(std::move(pts));
    }
    raise(ErrorKind::config, "reward: class must be 'linear' or 'welfare', got '" + cls + "'");
}

} // namespace rental
