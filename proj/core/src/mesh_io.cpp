#include "hmom/mesh_io.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace hmom {

namespace {

SurfaceMesh load_rawtri(std::istream& in, const std::string& path) {
  size_t nv = 0, nt = 0;
  if (!(in >> nv >> nt))
    throw std::runtime_error(path + ": rawtri header 'nv nt' missing");
  std::vector<Vec3> verts(nv);
  for (size_t i = 0; i < nv; ++i)
    if (!(in >> verts[i].x() >> verts[i].y() >> verts[i].z()))
      throw std::runtime_error(path + ": truncated vertex list at line " +
                               std::to_string(i + 2));
  std::vector<std::array<int, 3>> tris(nt);
  for (size_t i = 0; i < nt; ++i)
    if (!(in >> tris[i][0] >> tris[i][1] >> tris[i][2]))
      throw std::runtime_error(path + ": truncated triangle list");
  return make_mesh(std::move(verts), std::move(tris));
}

SurfaceMesh load_msh2(std::istream& in, const std::string& path) {
  std::string line;
  std::vector<Vec3> verts;
  std::vector<std::array<int, 3>> tris;
  std::unordered_map<long, int> nodeId;  // gmsh node id -> vertex index
  bool sawNodes = false, sawElements = false;

  while (std::getline(in, line)) {
    if (line.rfind("$MeshFormat", 0) == 0) {
      std::getline(in, line);
      std::istringstream fs(line);
      double version = 0;
      fs >> version;
      if (version < 2.0 || version >= 3.0)
        throw std::runtime_error(path + ": unsupported MSH version " + line);
    } else if (line.rfind("$Nodes", 0) == 0) {
      sawNodes = true;
      std::getline(in, line);
      size_t n = std::stoul(line);
      verts.reserve(n);
      for (size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line))
          throw std::runtime_error(path + ": truncated $Nodes section");
        std::istringstream ls(line);
        long id;
        Vec3 p;
        if (!(ls >> id >> p.x() >> p.y() >> p.z()))
          throw std::runtime_error(path + ": bad node line '" + line + "'");
        nodeId[id] = static_cast<int>(verts.size());
        verts.push_back(p);
      }
    } else if (line.rfind("$Elements", 0) == 0) {
      sawElements = true;
      std::getline(in, line);
      size_t n = std::stoul(line);
      for (size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line))
          throw std::runtime_error(path + ": truncated $Elements section");
        std::istringstream ls(line);
        long id;
        int type, ntags;
        if (!(ls >> id >> type >> ntags))
          throw std::runtime_error(path + ": bad element line '" + line + "'");
        for (int t = 0; t < ntags; ++t) {
          long tag;
          ls >> tag;
        }
        if (type != 2) continue;  // only 3-node triangles carry unknowns
        long a, b, c;
        if (!(ls >> a >> b >> c))
          throw std::runtime_error(path + ": triangle element " +
                                   std::to_string(id) + " missing nodes");
        auto look = [&](long nid) {
          auto it = nodeId.find(nid);
          if (it == nodeId.end())
            throw std::runtime_error(path + ": element references unknown node " +
                                     std::to_string(nid));
          return it->second;
        };
        tris.push_back({look(a), look(b), look(c)});
      }
    }
  }
  if (!sawNodes || !sawElements)
    throw std::runtime_error(path + ": missing $Nodes or $Elements section");
  return make_mesh(std::move(verts), std::move(tris));
}

}  // namespace

SurfaceMesh load_mesh(const std::string& path, MeshFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file: " + path);
  switch (format) {
    case MeshFormat::rawtri:
      return load_rawtri(in, path);
    case MeshFormat::msh2:
      return load_msh2(in, path);
  }
  throw std::logic_error("unreachable mesh format");
}

MeshFormat mesh_format_from_string(const std::string& name) {
  if (name == "msh2") return MeshFormat::msh2;
  if (name == "rawtri") return MeshFormat::rawtri;
  throw std::invalid_argument("unknown mesh format '" + name +
                              "' (expected msh2 or rawtri)");
}

void save_rawtri(const SurfaceMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write mesh file: " + path);
  out.precision(17);
  out << mesh.vertices.size() << " " << mesh.triangles.size() << "\n";
  for (const auto& v : mesh.vertices)
    out << v.x() << " " << v.y() << " " << v.z() << "\n";
  for (const auto& t : mesh.triangles)
    out << t.v[0] << " " << t.v[1] << " " << t.v[2] << "\n";
}

std::string mesh_stats_json(const SurfaceMesh& mesh) {
  nlohmann::json j;
  j["vertices"] = mesh.vertices.size();
  j["triangles"] = mesh.triangles.size();
  j["rwgBases"] = mesh.edges.size();
  j["totalArea"] = mesh.total_area();
  j["minEdgeLength"] = mesh.min_edge_length();
  j["maxEdgeLength"] = mesh.max_edge_length();
  j["boundingBox"]["lo"] = {mesh.boundingBox.lo.x(), mesh.boundingBox.lo.y(),
                            mesh.boundingBox.lo.z()};
  j["boundingBox"]["hi"] = {mesh.boundingBox.hi.x(), mesh.boundingBox.hi.y(),
                            mesh.boundingBox.hi.z()};
  return j.dump(2);
}

}  // namespace hmom
