// liefrob command-line front end. Talks to the shared library exclusively
// through the public C interface.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "liefrob.h"

namespace {

int exitCodeOf(lf_status status) {
  switch (status) {
    case LF_OK: return 0;
    case LF_ERR_PARSE: return 1;
    case LF_ERR_VALIDATION: return 2;
    case LF_ERR_VERIFICATION: return 3;
    case LF_ERR_NOT_FROBENIUS: return 4;
    default: return 1;
  }
}

void printError(lf_status status) {
  std::cerr << "error: " << lf_last_error() << "\n";
  (void)status;
}

std::optional<std::string> readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { lf_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct OwnedAlgebra {
  lf_algebra* ptr = nullptr;
  ~OwnedAlgebra() { lf_algebra_free(ptr); }
};

// Loads from --preset or a path argument.
lf_status loadAlgebra(const std::string& path, const std::string& preset,
                      const std::string& ktilde, OwnedAlgebra& out) {
  if (!preset.empty())
    return lf_algebra_preset(preset.c_str(),
                             ktilde.empty() ? nullptr : ktilde.c_str(),
                             &out.ptr);
  auto text = readFile(path);
  if (!text) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return LF_ERR_PARSE;
  }
  return lf_algebra_parse(text->c_str(), &out.ptr);
}

int renderAndPrint(const std::string& reportJson, const std::string& format,
                   std::ostream& os) {
  if (format == "json") {
    os << reportJson;
    return 0;
  }
  OwnedString text;
  lf_status status = lf_render_text(reportJson.c_str(), &text.ptr);
  if (status != LF_OK) {
    printError(status);
    return exitCodeOf(status);
  }
  os << text.str();
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius Lie algebra analyzer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lf_version()));

  std::string path, preset, functional, format = "text", outPath, ktilde;
  std::uint64_t seed = 0;

  auto* validateCmd = app.add_subcommand("validate", "Check antisymmetry and the Jacobi identity");
  validateCmd->add_option("path", path, "algebra file")->required();
  validateCmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* analyzeCmd = app.add_subcommand("analyze", "Run the full Frobenius analysis pipeline");
  analyzeCmd->add_option("path", path, "algebra file");
  analyzeCmd->add_option("--preset", preset, "built-in example (aff1, g7a, g7b, g7c)");
  analyzeCmd->add_option("--ktilde", ktilde, "parameter for the g7c preset");
  analyzeCmd->add_option("--functional", functional, "comma-separated coordinates of alpha");
  analyzeCmd->add_option("--seed", seed, "seed for the functional search");
  analyzeCmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* embedCmd = app.add_subcommand("embed", "Embed into sl(dim+1) and verify");
  embedCmd->add_option("path", path, "algebra file");
  embedCmd->add_option("--preset", preset, "built-in example");
  embedCmd->add_option("--ktilde", ktilde, "parameter for the g7c preset");
  embedCmd->add_option("--functional", functional, "comma-separated coordinates of alpha");
  embedCmd->add_option("--seed", seed, "seed for the functional search");
  embedCmd->add_option("--out", outPath, "write the embedding file here instead of stdout");

  auto* catalogCmd = app.add_subcommand("catalog", "Emit a constructor's algebra file");
  std::string name;
  int n = 1, p = 1;
  std::string kParam = "1", diag, mRows, rates, field = "rational";
  catalogCmd->add_option("name", name, "aff | glsemi | gkxi | golden | diagonal | preset")->required();
  catalogCmd->add_option("--n", n);
  catalogCmd->add_option("--p", p);
  catalogCmd->add_option("--k", kParam, "scalar k for gkxi");
  catalogCmd->add_option("--diag", diag, "2n comma-separated diagonal entries for gkxi");
  catalogCmd->add_option("--m", mRows, "full 2n x 2n matrix, rows separated by ';'");
  catalogCmd->add_option("--rates", rates, "n comma-separated rates for diagonal");
  catalogCmd->add_option("--preset", preset, "preset name when name = preset");
  catalogCmd->add_option("--ktilde", ktilde, "parameter for the g7c preset");
  catalogCmd->add_option("--field", field)->check(CLI::IsMember({"rational", "complex64"}));

  CLI11_PARSE(app, argc, argv);

  if (validateCmd->parsed()) {
    OwnedAlgebra algebra;
    lf_status status = loadAlgebra(path, "", "", algebra);
    if (status != LF_OK) {
      printError(status);
      return exitCodeOf(status);
    }
    OwnedString report;
    status = lf_algebra_validate(algebra.ptr, &report.ptr);
    if (status != LF_OK && status != LF_ERR_VALIDATION) {
      printError(status);
      return exitCodeOf(status);
    }
    int renderRc = renderAndPrint(report.str(), format, std::cout);
    return renderRc != 0 ? renderRc : exitCodeOf(status);
  }

  if (analyzeCmd->parsed()) {
    if (path.empty() == preset.empty()) {
      std::cerr << "error: provide exactly one of a path or --preset\n";
      return 1;
    }
    OwnedAlgebra algebra;
    lf_status status = loadAlgebra(path, preset, ktilde, algebra);
    if (status != LF_OK) {
      printError(status);
      return exitCodeOf(status);
    }
    OwnedString report;
    status = lf_algebra_analyze(algebra.ptr,
                                functional.empty() ? nullptr : functional.c_str(),
                                seed, &report.ptr);
    if (status != LF_OK && status != LF_ERR_NOT_FROBENIUS) {
      printError(status);
      return exitCodeOf(status);
    }
    int renderRc = renderAndPrint(report.str(), format, std::cout);
    return renderRc != 0 ? renderRc : exitCodeOf(status);
  }

  if (embedCmd->parsed()) {
    if (path.empty() == preset.empty()) {
      std::cerr << "error: provide exactly one of a path or --preset\n";
      return 1;
    }
    OwnedAlgebra algebra;
    lf_status status = loadAlgebra(path, preset, ktilde, algebra);
    if (status != LF_OK) {
      printError(status);
      return exitCodeOf(status);
    }
    OwnedString embedding;
    status = lf_algebra_embed(algebra.ptr,
                              functional.empty() ? nullptr : functional.c_str(),
                              seed, &embedding.ptr);
    if (status != LF_OK) {
      printError(status);
      return exitCodeOf(status);
    }
    if (outPath.empty()) {
      std::cout << embedding.str();
    } else {
      std::ofstream out(outPath, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << outPath << "'\n";
        return 1;
      }
      out << embedding.str();
    }
    return 0;
  }

  if (catalogCmd->parsed()) {
    std::ostringstream params;
    auto jsonList = [](const std::string& csv) {
      std::ostringstream os;
      os << "[";
      std::istringstream in(csv);
      std::string tok;
      bool first = true;
      while (std::getline(in, tok, ',')) {
        os << (first ? "" : ",") << "\"" << tok << "\"";
        first = false;
      }
      os << "]";
      return os.str();
    };
    params << "{\"name\":\"" << name << "\"";
    if (name == "aff" || name == "golden" || name == "gkxi")
      params << ",\"n\":" << n;
    if (name == "glsemi") params << ",\"n\":" << n << ",\"p\":" << p;
    if (name == "gkxi") {
      params << ",\"k\":\"" << kParam << "\"";
      if (!diag.empty()) params << ",\"diag\":" << jsonList(diag);
      if (!mRows.empty()) {
        params << ",\"m\":[";
        std::istringstream rows(mRows);
        std::string row;
        bool first = true;
        while (std::getline(rows, row, ';')) {
          params << (first ? "" : ",") << jsonList(row);
          first = false;
        }
        params << "]";
      }
    }
    if (name == "diagonal") params << ",\"rates\":" << jsonList(rates);
    if (name == "gkxi" || name == "diagonal")
      params << ",\"field\":\"" << field << "\"";
    if (name == "preset") {
      params << ",\"preset\":\"" << preset << "\"";
      if (!ktilde.empty()) params << ",\"ktilde\":\"" << ktilde << "\"";
    }
    params << "}";

    OwnedAlgebra algebra;
    lf_status status = lf_algebra_catalog(params.str().c_str(), &algebra.ptr);
    if (status != LF_OK) {
      printError(status);
      return exitCodeOf(status);
    }
    OwnedString file;
    status = lf_algebra_emit(algebra.ptr, &file.ptr);
    if (status != LF_OK) {
      printError(status);
      return exitCodeOf(status);
    }
    std::cout << file.str();
    return 0;
  }

  return 1;
}
