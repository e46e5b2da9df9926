// Command-line front end: construct the gallery counterexamples, decide the
// supported properties on edge-list inputs, and independently re-verify
// certificate files. Exit codes for `check`: 0 holds, 1 fails, 2 undecidable
// at the configured caps (also used for input errors).

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "estar/certificates.hpp"
#include "estar/gallery.hpp"
#include "estar/io.hpp"

namespace fs = std::filesystem;
using namespace estar;

namespace {

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << contents;
}

Caps caps_from_flags(int max_vertices, int max_edges, int max_bits) {
  Caps caps;
  caps.max_vertices = max_vertices;
  caps.max_edges = max_edges;
  caps.max_subset_bits = max_bits;
  if (const char* env = std::getenv("ESTAR_MAX_BITS")) {
    try {
      caps.max_subset_bits = std::stoi(env);
    } catch (...) {
      throw InputError("ESTAR_MAX_BITS must be an integer");
    }
  }
  return caps;
}

int cmd_gallery(const std::string& name, const std::string& out_dir, bool dot, const Caps& caps) {
  std::vector<std::string> names = name == "all" ? gallery_names() : std::vector<std::string>{name};
  fs::create_directories(out_dir);
  for (const auto& n : names) {
    GalleryEntry e = make_gallery_entry(n, caps);
    for (const auto& f : e.files) {
      if (!dot && f.filename.size() > 4 && f.filename.substr(f.filename.size() - 4) == ".dot")
        continue;
      write_file(fs::path(out_dir) / f.filename, f.contents);
      std::cout << "wrote " << (fs::path(out_dir) / f.filename).string() << "\n";
    }
    std::cout << e.name << ": " << e.summary << "\n";
  }
  return 0;
}

int cmd_check(const std::string& file, const std::string& property, const std::string& out_file,
              const std::string& dot_file, const Caps& caps) {
  Graph g = read_edge_list_file(file);
  if (g.n > caps.max_vertices || g.m() > caps.max_edges) {
    std::cerr << "undecidable: graph exceeds --max-vertices/--max-edges caps\n";
    return 2;
  }
  if (!dot_file.empty()) write_file(dot_file, to_dot(g));
  PropertyOutcome out = run_property_check(g, property, caps);
  std::cout << property << ": " << out.message << "\n";
  if (!out.certificate.is_null() && !out.certificate.empty()) {
    std::string dumped = dump_certificate(out.certificate);
    if (out_file.empty())
      std::cout << dumped;
    else
      write_file(out_file, dumped);
  }
  return out.exit_code;
}

int cmd_verify(const std::string& file, const Caps& caps) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << "\n";
    return 2;
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  VerifyReport r = verify_certificate(j, caps);
  std::cout << (r.ok ? "PASS" : "FAIL") << ": " << r.detail << "\n";
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equistable/equistarable counterexample toolkit"};
  app.require_subcommand(1);

  int max_vertices = 32, max_edges = 64, max_bits = 24;
  app.add_option("--max-vertices", max_vertices, "vertex cap for enumerations");
  app.add_option("--max-edges", max_edges, "edge cap for subset machinery");
  app.add_option("--max-subset-bits", max_bits,
                 "2^bits subset-scan cap (env ESTAR_MAX_BITS overrides)");

  auto* gal = app.add_subcommand("gallery", "emit a named counterexample with certificates");
  std::string gal_name, gal_out = ".";
  bool gal_dot = true;
  gal->add_option("name", gal_name, "gallery entry (or 'all'); see `gallery list`")->required();
  gal->add_option("--out", gal_out, "output directory");
  gal->add_flag("--dot,!--no-dot", gal_dot, "also write DOT files");

  auto* chk = app.add_subcommand("check", "decide a property of an edge-list graph");
  std::string chk_file, chk_property, chk_out, chk_dot;
  chk->add_option("file", chk_file, "edge-list file (\"n m\" header, then \"u v\" lines)")
      ->required();
  chk->add_option("--property", chk_property, "one of: bad, equistarable, strongly-equistarable, "
                                              "equistable, strongly-equistable, general-partition, "
                                              "strong-clique, 2-extendable")
      ->required();
  chk->add_option("--out", chk_out, "write the certificate here instead of stdout");
  chk->add_option("--dot", chk_dot, "also export the graph as DOT to this file");

  auto* ver = app.add_subcommand("verify", "re-check a certificate file from scratch");
  std::string ver_file;
  ver->add_option("file", ver_file, "certificate JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Caps caps = caps_from_flags(max_vertices, max_edges, max_bits);
    if (gal->parsed()) {
      if (gal_name == "list") {
        for (const auto& n : gallery_names()) std::cout << n << "\n";
        return 0;
      }
      return cmd_gallery(gal_name, gal_out, gal_dot, caps);
    }
    if (chk->parsed()) return cmd_check(chk_file, chk_property, chk_out, chk_dot, caps);
    if (ver->parsed()) return cmd_verify(ver_file, caps);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "cap exhausted: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
