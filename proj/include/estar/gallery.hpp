#ifndef ESTAR_GALLERY_HPP
#define ESTAR_GALLERY_HPP

#include <string>
#include <vector>

#include "estar/certificates.hpp"

namespace estar {

struct GalleryFile {
  std::string filename;
  std::string contents;
};

/// A named counterexample with everything written down: the graph in
/// edge-list and DOT form plus every certificate that applies to it.
/// Constructing an entry re-verifies all of its claims.
struct GalleryEntry {
  std::string name;
  Graph graph;
  std::string summary;
  std::vector<GalleryFile> files;
};

std::vector<std::string> gallery_names();
GalleryEntry make_gallery_entry(const std::string& name, const Caps& caps = {});

}  // namespace estar

#endif
