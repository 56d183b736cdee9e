#include "tcurv/driver.hpp"
#include "tcurv/errors.hpp"
#include "tcurv/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

tcurv::Manifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return tcurv::parse_manifest(buf.str());
}

std::array<tcurv::Rational, 8> parse_params_list(const std::string& list) {
  std::array<tcurv::Rational, 8> out;
  std::istringstream in(list);
  std::string tok;
  std::size_t n = 0;
  while (std::getline(in, tok, ',')) {
    if (n >= 8) throw std::invalid_argument("--params takes exactly 8 comma-separated rationals");
    out[n++] = tcurv::Rational::parse(tok);
  }
  if (n != 8) throw std::invalid_argument("--params takes exactly 8 comma-separated rationals");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of curvature identities on homogeneous frames"};
  app.require_subcommand(1);

  std::string manifest_path;
  std::string preset_name;
  std::string params_list;
  std::string mode = "both";
  std::string checks_list;
  std::string format = "text";
  bool timestamps = false;

  CLI::App* verify = app.add_subcommand("verify", "run the check suites on a manifest");
  verify->add_option("file", manifest_path, "manifest file")->required();
  verify->add_option("--preset", preset_name, "named parameter preset");
  verify->add_option("--params", params_list, "explicit a0,a1,...,a7");
  verify->add_option("--mode", mode, "local|global|both")
      ->check(CLI::IsMember({"local", "global", "both"}));
  verify->add_option("--checks", checks_list, "comma-separated check groups");
  verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timestamps", timestamps, "include a generation timestamp");

  std::string geom_path;
  CLI::App* geometry = app.add_subcommand("geometry", "print derived connection and curvature");
  geometry->add_option("file", geom_path, "manifest file")->required();

  int presets_dim = 3;
  CLI::App* presets = app.add_subcommand("presets", "print the preset coefficient table");
  presets->add_option("--dim", presets_dim, "dimension")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (!preset_name.empty() && !params_list.empty()) {
        std::cerr << "error: --preset and --params are mutually exclusive\n";
        return 2;
      }
      tcurv::Manifest manifest = load_manifest(manifest_path);
      tcurv::VerifyOptions options;
      if (!preset_name.empty()) options.preset_name = preset_name;
      if (!params_list.empty()) options.explicit_params = parse_params_list(params_list);
      options.mode = mode == "local"    ? tcurv::ModeSelection::Local
                     : mode == "global" ? tcurv::ModeSelection::Global
                                        : tcurv::ModeSelection::Both;
      if (!checks_list.empty()) {
        std::vector<std::string> groups;
        std::istringstream in(checks_list);
        std::string tok;
        while (std::getline(in, tok, ',')) groups.push_back(tok);
        options.check_groups = groups;
      }
      options.timestamps = timestamps;
      if (!manifest.name) manifest.name = manifest_path;

      tcurv::VerificationResult result = tcurv::run_verification(manifest, options);
      std::cout << (format == "json" ? tcurv::render_json(result, timestamps)
                                     : tcurv::render_text(result, timestamps));
      return result.exit_code();
    }
    if (geometry->parsed()) {
      tcurv::Manifest manifest = load_manifest(geom_path);
      tcurv::GeometryCache geom = tcurv::GeometryCache::derive(manifest.frame);
      std::cout << tcurv::render_geometry_text(geom);
      return 0;
    }
    if (presets->parsed()) {
      std::cout << tcurv::render_presets_text(presets_dim);
      return 0;
    }
  } catch (const tcurv::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const tcurv::invalid_frame_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& c : e.report().checks)
      if (!c.pass) std::cerr << "  FAIL " << c.id << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
