// Command-line driver: runs one preset experiment and writes its outputs.
#include "pcns/config.hpp"
#include "pcns/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Partially congested Navier-Stokes free-boundary solver"};
    std::string config_path, preset, out_dir;
    std::vector<std::string> overrides;
    bool list = false;
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--preset", preset, "preset experiment name");
    app.add_option("--out-dir", out_dir, "output directory");
    app.add_option("--override", overrides, "key=value setting applied last (repeatable)")->take_all();
    app.add_flag("--list-presets", list, "print the preset names and exit");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& p : pcns::presets()) std::cout << p << '\n';
        return 0;
    }

    pcns::RunConfig cfg;
    try {
        std::vector<pcns::ConfigEntry> entries;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw pcns::ConfigError("--config: cannot open '" + config_path + "'");
            entries = pcns::parse_config_text(in, config_path);
        }
        cfg = pcns::build_config(config_path.empty() ? nullptr : &entries, preset, overrides, out_dir);
    } catch (const pcns::Error& e) {
        const nlohmann::json f = {{"status", "error"}, {"kind", e.kind()}, {"message", e.what()}};
        std::cout << f.dump() << '\n';
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    return pcns::run(cfg, std::cerr);
}
