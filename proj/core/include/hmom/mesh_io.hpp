#pragma once

#include <string>

#include "hmom/mesh.hpp"

namespace hmom {

enum class MeshFormat { msh2, rawtri };

/// Loads a triangle surface mesh. msh2 is the Gmsh MSH 2.2 ASCII subset
/// ($Nodes plus 3-node triangle elements); rawtri is the plain text format
/// described in the README ("nv nt" header, one vertex per line, one
/// 0-based index triple per line). Duplicate vertices within 1e-9 m merge.
SurfaceMesh load_mesh(const std::string& path, MeshFormat format);

MeshFormat mesh_format_from_string(const std::string& name);

void save_rawtri(const SurfaceMesh& mesh, const std::string& path);

/// Mesh statistics (counts, bounding box, edge length range) as a JSON
/// string.
std::string mesh_stats_json(const SurfaceMesh& mesh);

}  // namespace hmom
