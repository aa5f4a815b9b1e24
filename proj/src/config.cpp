#include "klr/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace klr {

namespace {

using nlohmann::json;

std::pair<int, int> label_pair(const CartanDatum& d, const std::string& key)
{
    const auto comma = key.find(',');
    if (comma == std::string::npos)
        throw error(errc::config_error, "expected 'label,label' key, got '" + key + "'");
    return {d.label_index(key.substr(0, comma)), d.label_index(key.substr(comma + 1))};
}

TMap parse_tmap(const CartanDatum& d, const json& j)
{
    TMap out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[label_pair(d, it.key())] = parse_rat(it.value().get<std::string>());
    return out;
}

LoadedConfig from_json(const json& j)
{
    if (!j.contains("labels") || !j.contains("bilinear"))
        throw error(errc::config_error, "config needs 'labels' and 'bilinear'");
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<std::vector<long>> form = j.at("bilinear").get<std::vector<std::vector<long>>>();
    CartanDatum base = CartanDatum::validate(std::move(labels), std::move(form));

    const bool extend = j.value("extend", false);
    if (extend && j.contains("params"))
        throw error(errc::config_error, "'params' and 'extend' are mutually exclusive");
    if (!extend && j.contains("residual_t"))
        throw error(errc::config_error, "'residual_t' requires 'extend'");

    LoadedConfig out;
    if (extend) {
        CartanDatum ext = base.extend();
        TMap residual;
        if (j.contains("residual_t"))
            residual = parse_tmap(ext, j.at("residual_t"));
        ScalarParams ps = specialized_params(ext, residual);
        out.ctx = make_context(std::move(ext), std::move(ps));
    } else {
        TMap tmap;
        RMap rmap;
        SMap smap;
        if (j.contains("params")) {
            const json& p = j.at("params");
            if (p.contains("t"))
                tmap = parse_tmap(base, p.at("t"));
            if (p.contains("r"))
                for (auto it = p.at("r").begin(); it != p.at("r").end(); ++it)
                    rmap[base.label_index(it.key())] = parse_rat(it.value().get<std::string>());
            if (p.contains("s"))
                for (const json& entry : p.at("s")) {
                    const int a = base.label_index(entry.at("i").get<std::string>());
                    const int b = base.label_index(entry.at("j").get<std::string>());
                    smap[{a, b, entry.at("p").get<int>(), entry.at("q").get<int>()}] =
                        parse_rat(entry.at("val").get<std::string>());
                }
        }
        ScalarParams ps = validate_params(base, tmap, rmap, smap);
        out.ctx = make_context(base, std::move(ps));
    }

    if (j.contains("lambda") || j.contains("nu")) {
        if (!j.contains("lambda") || !j.contains("nu"))
            throw error(errc::config_error, "'lambda' and 'nu' go together");
        if (!extend)
            throw error(errc::config_error, "a (lambda,nu) context requires 'extend'");
        const CartanDatum& d = out.ctx->datum;
        std::vector<ThickLabel> lambda;
        for (const json& entry : j.at("lambda")) {
            ThickLabel l;
            l.mult.assign(static_cast<std::size_t>(d.num_solid()), 0);
            for (auto it = entry.begin(); it != entry.end(); ++it) {
                const int c = d.label_index(it.key());
                if (d.is_barred(c))
                    throw error(errc::config_error, "lambda colors are solid labels");
                l.mult[static_cast<std::size_t>(c)] = it.value().get<int>();
            }
            lambda.push_back(std::move(l));
        }
        std::vector<int> nu;
        for (const json& entry : j.at("nu"))
            nu.push_back(d.label_index(entry.get<std::string>()));
        out.thick = make_thick_context(out.ctx, std::move(lambda), std::move(nu));
        out.nu_ordered = j.value("nu_ordered", false);
    }
    return out;
}

} // namespace

LoadedConfig parse_config(const std::string& json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw error(errc::config_error, std::string("bad JSON: ") + e.what());
    }
    try {
        return from_json(j);
    } catch (const json::exception& e) {
        throw error(errc::config_error, std::string("bad config: ") + e.what());
    }
}

LoadedConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw error(errc::config_error, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace klr
