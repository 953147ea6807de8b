#include "api.hpp"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include <charconv>

namespace tsol::api {

using codec::json;

namespace {

Response error(int status, const std::string& code, const std::string& message) {
  return {status, {{"error", code}, {"message", message}}};
}

std::map<std::string, std::string> query_of(const httplib::Request& req) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : req.params) out.emplace(k, v);
  return out;
}

// "line-5", "edges-5", "pnk-4-2", "random-5".
json preset(const std::string& name, std::uint64_t seed) {
  std::vector<int> nums;
  std::string kind = name.substr(0, name.find('-'));
  for (std::size_t pos = name.find('-'); pos != std::string::npos;) {
    auto next = name.find('-', pos + 1);
    int v = 0;
    auto part = name.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || v < 1 || v > 30)
      throw BadParams("bad preset \"" + name + "\"");
    nums.push_back(v);
    pos = next;
  }
  json patterns = json::array();
  if (kind == "line" && nums.size() == 1) {
    patterns.push_back(codec::to_json(p_nk(nums[0], 0, {0, 0})));
  } else if (kind == "edges" && nums.size() == 1) {
    for (const auto& e : edges_of_triangle(nums[0], {0, 0})) patterns.push_back(codec::to_json(e));
  } else if (kind == "pnk" && nums.size() == 2) {
    patterns.push_back(codec::to_json(p_nk(nums[0], nums[1], {0, 0})));
  } else if (kind == "random" && nums.size() == 1) {
    const Pattern line = p_nk(nums[0], 0, {0, 0});
    patterns.push_back(codec::to_json(random_walk(line, 20u * nums[0] * nums[0], seed)));
  } else {
    throw BadParams("unknown preset \"" + name + "\"");
  }
  return {{"name", name}, {"patterns", patterns}};
}

}  // namespace

Response Service::handle(const std::string& method, const std::string& path,
                         const std::string& body, const std::map<std::string, std::string>& query) {
  json parsed;
  if (method == "POST") {
    parsed = json::parse(body, nullptr, false);
    if (parsed.is_discarded()) return error(400, "bad_request", "request body is not valid JSON");
  }
  try {
    return dispatch(method, path, parsed, query);
  } catch (const ParseError& e) {
    return error(400, e.code(), e.what());
  } catch (const BadParams& e) {
    return error(400, e.code(), e.what());
  } catch (const InternalError& e) {
    spdlog::error("{} {}: {}", method, path, e.what());
    return error(500, e.code(), e.what());
  } catch (const Error& e) {
    return error(422, e.code(), e.what());
  } catch (const json::exception& e) {
    return error(400, "bad_request", e.what());
  }
}

Response Service::dispatch(const std::string& method, const std::string& path, const json& body,
                           const std::map<std::string, std::string>& query) {
  if (method == "GET" && path == "/api/health") return {200, {{"status", "ok"}}};

  if (method == "GET" && path == "/api/preset") {
    auto it = query.find("name");
    if (it == query.end()) throw BadParams("missing query parameter \"name\"");
    std::uint64_t seed = 1;
    if (auto s = query.find("seed"); s != query.end()) {
      auto [ptr, ec] = std::from_chars(s->second.data(), s->second.data() + s->second.size(), seed);
      if (ec != std::errc{} || ptr != s->second.data() + s->second.size())
        throw BadParams("bad seed");
    }
    return {200, preset(it->second, seed)};
  }

  if (path == "/api/session") {
    std::lock_guard lock(session_mutex_);
    if (method == "POST") {
      if (!body.contains("name") || !body["name"].is_string()) throw BadParams("missing \"name\"");
      sessions_[body["name"].get<std::string>()] = codec::pattern_from_json(body.at("pattern"));
      return {200, {{"stored", body["name"]}}};
    }
    auto it = query.find("name");
    if (it == query.end()) throw BadParams("missing query parameter \"name\"");
    auto found = sessions_.find(it->second);
    if (found == sessions_.end()) return error(404, "not_found", "no pattern named \"" + it->second + "\"");
    return {200, codec::to_json(found->second)};
  }

  if (method != "POST") return error(404, "not_found", "no route " + method + " " + path);

  if (path == "/api/fill") {
    const Pattern p = codec::pattern_from_json(body);
    const ExcessReport r = excess(p);
    json parts = json::array();
    for (std::size_t i = 0; i < r.decomposition.parts.size(); ++i) {
      const auto& part = r.decomposition.parts[i];
      parts.push_back({{"v", codec::to_json(part.anchor)},
                       {"k", part.size},
                       {"excess", r.decomposition.excess_per_part[i]}});
    }
    return {200, {{"filling", codec::to_json(fill(p))}, {"parts", parts}, {"excess", r.excess}}};
  }
  if (path == "/api/moves") {
    json out = json::array();
    for (const auto& m : legal_moves(codec::pattern_from_json(body))) out.push_back(codec::to_json(m));
    return {200, out};
  }
  if (path == "/api/apply") {
    const Pattern p = codec::pattern_from_json(body.at("pattern"));
    return {200, codec::to_json(apply_move(p, codec::move_from_json(body.at("move"))))};
  }
  if (path == "/api/normal-form") {
    return {200, codec::to_json(normal_form(codec::pattern_from_json(body)))};
  }
  if (path == "/api/normalize-path") {
    const Pattern p = codec::pattern_from_json(body);
    MoveSequence seq = to_normal_form(p);
    if (replay(seq) != realize(normal_form(p)))
      throw InternalError("normalization path failed server-side replay");
    return {200, codec::to_json(seq)};
  }
  if (path == "/api/path") {
    const Pattern from = codec::pattern_from_json(body.at("from"));
    const Pattern to = codec::pattern_from_json(body.at("to"));
    MoveSequence seq = path_between(from, to);
    if (replay(seq) != to) throw InternalError("path failed server-side replay");
    return {200, codec::to_json(seq)};
  }
  if (path == "/api/orbit-count") {
    std::size_t cap = kDefaultOrbitCap;
    if (body.contains("cap")) {
      if (!body["cap"].is_number_unsigned()) throw BadParams("\"cap\" must be a positive integer");
      cap = body["cap"].get<std::size_t>();
      if (cap < 1 || cap > kMaxOrbitCap)
        throw BadParams("\"cap\" must lie in [1, " + std::to_string(kMaxOrbitCap) + "]");
    }
    const Pattern p = codec::pattern_from_json(body.at("pattern"));
    return {200, {{"count", orbit_size(p, cap)}}};
  }
  if (path == "/api/tep/complete") {
    if (!body.contains("rule") || !body["rule"].is_string()) throw BadParams("missing \"rule\"");
    if (!body.contains("n") || !body["n"].is_number_integer()) throw BadParams("missing \"n\"");
    const int n = body["n"].get<int>();
    if (n < 1 || n > 64) throw BadParams("\"n\" must lie in [1, 64]");
    const TepFamily fam = TepFamily::from_rule(body["rule"].get<std::string>());
    const Assignment done = complete(fam, codec::assignment_from_json(body.at("assignment")), n);
    const bool full = done.size() == static_cast<std::size_t>(n) * (n + 1) / 2;
    return {200, {{"assignment", codec::to_json(done)}, {"complete", full}, {"valid", is_valid(fam, done)}}};
  }
  return error(404, "not_found", "no route POST " + path);
}

void Service::install(httplib::Server& server, const std::string& static_dir) {
  auto bridge = [this](const httplib::Request& req, httplib::Response& res) {
    Response r = handle(req.method, req.path, req.body, query_of(req));
    spdlog::info("{} {} -> {}", req.method, req.path, r.status);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  for (const char* route : {"/api/fill", "/api/moves", "/api/apply", "/api/normal-form",
                            "/api/normalize-path", "/api/path", "/api/orbit-count",
                            "/api/tep/complete", "/api/session"})
    server.Post(route, bridge);
  for (const char* route : {"/api/health", "/api/preset", "/api/session"}) server.Get(route, bridge);
  // anything else under /api gets a JSON 404 instead of an empty body
  server.Get(R"(/api/.*)", bridge);
  server.Post(R"(/api/.*)", bridge);
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir))
    spdlog::warn("static directory {} not found", static_dir);
}

}  // namespace tsol::api
