#include <hypercol/errors.hpp>
#include <hypercol/io.hpp>
#include <hypercol/manifest.hpp>

#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <memory>

namespace hypercol {

using nlohmann::json;

auto sha256_hex(const std::string & bytes) -> std::string
{
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (! ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

auto digest_file(const std::filesystem::path & path) -> FileDigest
{
  return {path.string(), sha256_hex(io::read_text(path))};
}

auto Manifest::to_json() const -> std::string
{
  json j;
  j["tool"] = {{"name", "hypercol"}, {"version", tool_version}};
  j["command"] = command;
  j["seed"] = seed ? json(*seed) : json(nullptr);
  auto files = [](const std::vector<FileDigest> & list) {
    auto arr = json::array();
    for (const auto & f : list)
      arr.push_back({{"path", f.path}, {"sha256", f.sha256}});
    return arr;
  };
  j["inputs"] = files(inputs);
  j["outputs"] = files(outputs);
  j["solver"] = {{"nodes", solver_nodes}};
  auto v = json::object();
  for (const auto & [key, text] : verdicts)
    v[key] = json::parse(text);
  j["verdicts"] = v;

  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  j["volatile"] = {{"timestamp", stamp}, {"wall_seconds", wall_seconds}};
  return j.dump(2) + "\n";
}

auto Manifest::from_json(const std::string & text) -> Manifest
{
  try {
    auto j = json::parse(text);
    Manifest m;
    m.command = j.at("command").get<std::vector<std::string>>();
    if (! j.at("seed").is_null())
      m.seed = j.at("seed").get<std::uint64_t>();
    for (const auto & f : j.at("inputs"))
      m.inputs.push_back({f.at("path"), f.at("sha256")});
    for (const auto & f : j.at("outputs"))
      m.outputs.push_back({f.at("path"), f.at("sha256")});
    m.solver_nodes = j.at("solver").at("nodes").get<std::uint64_t>();
    for (const auto & [key, value] : j.at("verdicts").items())
      m.verdicts[key] = value.dump();
    if (j.contains("volatile"))
      m.wall_seconds = j["volatile"].value("wall_seconds", 0.0);
    return m;
  }
  catch (const json::exception & e) {
    throw InputError(std::string("malformed manifest: ") + e.what());
  }
}

auto stale_outputs(const Manifest & manifest, const std::filesystem::path & base) -> std::vector<std::string>
{
  std::vector<std::string> stale;
  for (const auto & f : manifest.outputs) {
    auto path = base.empty() ? std::filesystem::path(f.path) : base / f.path;
    if (! std::filesystem::exists(path) || sha256_hex(io::read_text(path)) != f.sha256)
      stale.push_back(f.path);
  }
  return stale;
}

} // namespace hypercol
