#include "padya/service.h"

#include <random>
#include <sstream>

#include "httplib.h"
#include "padya/error.h"
#include "padya/report.h"

namespace padya {
namespace {

using nlohmann::json;

ServiceReply bad_request(const std::string& field, const std::string& message) {
  return {400, json{{"error", "bad-request"}, {"field", field}, {"message", message}}};
}

ServiceReply not_found(const std::string& id) {
  return {404, json{{"error", "not-found"}, {"message", "no session '" + id + "'"}}};
}

ServiceReply conflict(const std::string& message) {
  return {409, json{{"error", "conflict"}, {"message", message}}};
}

// Field name carried in invalid-argument messages as "field: message".
ServiceReply from_error(const Error& e) {
  const std::string msg = e.what();
  const auto colon = msg.find(": ");
  if (e.code() == ErrorCode::kInvalidArgument && colon != std::string::npos) {
    return bad_request(msg.substr(0, colon), msg.substr(colon + 2));
  }
  json body{{"error", "bad-request"}, {"code", to_string(e.code())}, {"message", msg}};
  if (e.code() == ErrorCode::kUnknownCodepoint) body["position"] = e.position();
  body["field"] = "prose";
  return {400, body};
}

std::optional<json> parse_body(const std::string& body, ServiceReply& err) {
  try {
    json doc = json::parse(body);
    if (!doc.is_object()) {
      err = bad_request("", "payload must be a JSON object");
      return std::nullopt;
    }
    return doc;
  } catch (const json::parse_error& e) {
    err = bad_request("", std::string("malformed JSON: ") + e.what());
    return std::nullopt;
  }
}

std::string new_token(std::uint64_t counter) {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream os;
  os << std::hex << rng() << '-' << counter;
  return os.str();
}

}  // namespace

const char* to_string(SessionState s) {
  switch (s) {
    case SessionState::kAwaitingAnswers: return "awaiting-answers";
    case SessionState::kRunning: return "running";
    case SessionState::kDone: return "done";
  }
  return "?";
}

CompositionRequest parse_request(const json& doc) {
  auto invalid = [](const std::string& field, const std::string& msg) {
    return Error(ErrorCode::kInvalidArgument, field + ": " + msg);
  };
  CompositionRequest req;
  if (!doc.contains("prose") || !doc["prose"].is_string()) throw invalid("prose", "required string");
  const std::string prose = doc["prose"].get<std::string>();
  bool spelled = false;
  if (doc.contains("spelled")) {
    if (!doc["spelled"].is_boolean()) throw invalid("spelled", "must be a boolean");
    spelled = doc["spelled"].get<bool>();
  }
  if (spelled) {
    const auto tokens = split_spelled_tokens(prose);
    req.prose = tokenize(decode_spelled(tokens));
    req.prose.source_mode = SourceMode::kSpelledLetters;
  } else {
    req.prose = tokenize(prose);
  }
  req.mode = Mode::kInteractive;
  if (doc.contains("mode")) {
    const auto& m = doc["mode"];
    if (m == "batch") {
      req.mode = Mode::kBatch;
    } else if (m != "interactive") {
      throw invalid("mode", "expected \"batch\" or \"interactive\"");
    }
  }
  if (doc.contains("max_permutations")) {
    const auto& m = doc["max_permutations"];
    if (!m.is_number_unsigned() || m.get<std::uint64_t>() == 0) throw invalid("max_permutations", "must be a positive integer");
    req.max_permutations = m.get<std::size_t>();
  }
  if (doc.contains("families")) {
    const auto& f = doc["families"];
    if (!f.is_array() || f.empty()) throw invalid("families", "must be a non-empty array");
    req.families.clear();
    for (const auto& x : f) {
      const auto fam = x.is_string() ? parse_family(x.get<std::string>()) : std::nullopt;
      if (!fam) throw invalid("families", "unknown family " + x.dump());
      req.families.insert(*fam);
    }
  }
  return req;
}

std::shared_ptr<Session> Service::find(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

json Service::describe(Session& s) const {
  json pending = json::array();
  json answered = json::array();
  for (std::size_t i = 0; i < s.questions.size(); ++i) {
    const auto& q = s.questions[i];
    json qj = to_json(q);
    qj["index"] = i;
    auto it = s.request.overrides.find({q.left_word, q.right_word});
    if (it == s.request.overrides.end()) {
      pending.push_back(qj);
    } else {
      qj["dual"] = it->second;
      answered.push_back(qj);
    }
  }
  return json{{"session_id", s.id},
              {"state", to_string(s.state)},
              {"pending_questions", pending},
              {"answered", answered}};
}

void Service::run(Session& s) {
  s.state = SessionState::kRunning;
  CompositionResult r = composer_.compose(s.request);
  if (r.status == Status::kNeedsInput) {
    // Oversize groups can surface pairs that were not asked up front.
    for (auto& q : r.pending_questions) s.questions.push_back(q);
    s.state = SessionState::kAwaitingAnswers;
    return;
  }
  s.result = std::move(r);
  s.state = SessionState::kDone;
}

ServiceReply Service::create_session(const std::string& body) {
  ServiceReply err;
  auto doc = parse_body(body, err);
  if (!doc) return err;
  auto s = std::make_shared<Session>();
  try {
    s->request = parse_request(*doc);
    if (s->request.prose.words.empty()) throw Error(ErrorCode::kEmptyInput, "no words to compose");
  } catch (const Error& e) {
    return from_error(e);
  }
  s->id = new_token(next_id_++);
  std::lock_guard lock(s->mutex);
  {
    std::lock_guard map_lock(sessions_mutex_);
    sessions_[s->id] = s;
  }
  if (s->request.mode == Mode::kInteractive) s->questions = pragrhya_pairs(s->request.prose.words, {});
  if (s->questions.empty()) run(*s);
  ServiceReply reply{201, describe(*s)};
  return reply;
}

ServiceReply Service::get_session(const std::string& id) {
  auto s = find(id);
  if (!s) return not_found(id);
  std::lock_guard lock(s->mutex);
  return {200, describe(*s)};
}

ServiceReply Service::answer(const std::string& id, const std::string& body) {
  auto s = find(id);
  if (!s) return not_found(id);
  ServiceReply err;
  auto doc = parse_body(body, err);
  if (!doc) return err;
  std::lock_guard lock(s->mutex);
  if (s->state != SessionState::kAwaitingAnswers) return conflict("session is " + std::string(to_string(s->state)));

  std::vector<json> items;
  if (doc->contains("answers")) {
    if (!(*doc)["answers"].is_array()) return bad_request("answers", "must be an array");
    for (const auto& a : (*doc)["answers"]) items.push_back(a);
  } else {
    items.push_back(*doc);
  }
  // Validate everything before touching the session.
  std::vector<std::pair<std::pair<std::string, std::string>, bool>> parsed;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const json& a = items[k];
    const std::string prefix = doc->contains("answers") ? "answers[" + std::to_string(k) + "]." : "";
    if (!a.is_object()) return bad_request(prefix, "answer must be an object");
    if (!a.contains("dual") || !a["dual"].is_boolean()) return bad_request(prefix + "dual", "required boolean");
    std::pair<std::string, std::string> key;
    if (a.contains("question")) {
      if (!a["question"].is_number_unsigned()) return bad_request(prefix + "question", "must be an index");
      const auto idx = a["question"].get<std::size_t>();
      if (idx >= s->questions.size()) return bad_request(prefix + "question", "no question " + std::to_string(idx));
      key = {s->questions[idx].left_word, s->questions[idx].right_word};
    } else if (a.contains("left") && a.contains("right") && a["left"].is_string() && a["right"].is_string()) {
      key = {a["left"].get<std::string>(), a["right"].get<std::string>()};
      const bool asked = std::any_of(s->questions.begin(), s->questions.end(), [&](const PendingQuestion& q) {
        return q.left_word == key.first && q.right_word == key.second;
      });
      if (!asked) return bad_request(prefix + "left", "no question for (" + key.first + ", " + key.second + ")");
    } else {
      return bad_request(prefix + "question", "give a question index or left and right words");
    }
    if (s->request.overrides.count(key)) return conflict("(" + key.first + ", " + key.second + ") is already answered");
    for (const auto& p : parsed) {
      if (p.first == key) return conflict("(" + key.first + ", " + key.second + ") answered twice");
    }
    parsed.emplace_back(key, a["dual"].get<bool>());
  }
  for (const auto& [key, dual] : parsed) s->request.overrides[key] = dual;

  const bool all = std::all_of(s->questions.begin(), s->questions.end(), [&](const PendingQuestion& q) {
    return s->request.overrides.count({q.left_word, q.right_word}) > 0;
  });
  if (all) {
    try {
      run(*s);
    } catch (const Error& e) {
      return from_error(e);
    }
  }
  return {200, describe(*s)};
}

ServiceReply Service::result(const std::string& id) {
  auto s = find(id);
  if (!s) return not_found(id);
  std::lock_guard lock(s->mutex);
  if (s->state != SessionState::kDone) return conflict("session is " + std::string(to_string(s->state)));
  return {200, to_json(*s->result)};
}

ServiceReply Service::scan(const std::string& body) {
  ServiceReply err;
  auto doc = parse_body(body, err);
  if (!doc) return err;
  std::vector<std::string> lines;
  if (doc->contains("lines")) {
    const auto& l = (*doc)["lines"];
    if (!l.is_array()) return bad_request("lines", "must be an array of strings");
    for (const auto& x : l) {
      if (!x.is_string()) return bad_request("lines", "must be an array of strings");
      lines.push_back(x.get<std::string>());
    }
  } else if (doc->contains("text") && (*doc)["text"].is_string()) {
    std::istringstream in((*doc)["text"].get<std::string>());
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  } else {
    return bad_request("lines", "give lines (array) or text (string)");
  }
  try {
    return {200, to_json(scan_lines(lines, CatalogView::all(*catalog_)))};
  } catch (const Error& e) {
    json body{{"error", "bad-request"}, {"field", "lines"}, {"code", to_string(e.code())}, {"message", e.what()}};
    return {400, body};
  }
}

void Service::mount(httplib::Server& server) {
  auto send = [](httplib::Response& res, const ServiceReply& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Post("/sessions", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, create_session(req.body));
  });
  server.Get(R"(/sessions/([^/]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, get_session(req.matches[1]));
  });
  server.Post(R"(/sessions/([^/]+)/answers)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, answer(req.matches[1], req.body));
  });
  server.Get(R"(/sessions/([^/]+)/result)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, result(req.matches[1]));
  });
  server.Post("/scan", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, scan(req.body));
  });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string msg = "internal error";
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      msg = e.what();
    }
    res.status = 500;
    res.set_content(json{{"error", "internal"}, {"message", msg}}.dump(), "application/json");
  });
}

int serve(const Catalog& catalog, int port) {
  Service service(catalog);
  httplib::Server server;
  service.mount(server);
  if (!server.listen("127.0.0.1", port)) return 1;
  return 0;
}

}  // namespace padya
