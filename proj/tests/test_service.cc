#include <gtest/gtest.h>

#include <thread>

#include "httplib.h"
#include "padya/report.h"
#include "padya/service.h"
#include "test_util.h"

using namespace padya;
using nlohmann::json;
using padya::testing::flat;
using padya::testing::seed_catalog;

namespace {

std::string body(const json& j) { return j.dump(); }

}  // namespace

TEST(Service, PhaleAtraAsksOneQuestion) {
  Service s(seed_catalog());
  const ServiceReply created = s.create_session(body({{"prose", "phale atra"}}));
  ASSERT_EQ(created.status, 201);
  EXPECT_EQ(created.body["state"], "awaiting-answers");
  ASSERT_EQ(created.body["pending_questions"].size(), 1u);
  EXPECT_EQ(created.body["pending_questions"][0]["left"], "phale");
  EXPECT_EQ(created.body["pending_questions"][0]["right"], "atra");
  const std::string id = created.body["session_id"];
  EXPECT_EQ(s.result(id).status, 409);
}

TEST(Service, DualAnswerKeepsWordsApart) {
  Service s(seed_catalog());
  const std::string id = s.create_session(body({{"prose", "phale atra"}, {"max_permutations", 1}})).body["session_id"];
  const ServiceReply a = s.answer(id, body({{"question", 0}, {"dual", true}}));
  ASSERT_EQ(a.status, 200);
  EXPECT_EQ(a.body["state"], "done");
  const ServiceReply r = s.result(id);
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["schema_version"], kReportSchemaVersion);
  EXPECT_NE(flat(r.body["verse_text"].get<std::string>()).find("phale"), std::string::npos);
  EXPECT_EQ(flat(r.body["verse_text"].get<std::string>()).find("phale'tra"), std::string::npos);
}

TEST(Service, SecondAnswerRejected) {
  Service s(seed_catalog());
  const std::string id = s.create_session(body({{"prose", "phale atra vane"}})).body["session_id"];
  EXPECT_EQ(s.answer(id, body({{"left", "phale"}, {"right", "atra"}, {"dual", false}})).status, 200);
  EXPECT_EQ(s.answer(id, body({{"left", "phale"}, {"right", "atra"}, {"dual", true}})).status, 409);
  const ServiceReply state = s.get_session(id);
  EXPECT_EQ(state.body["state"], "awaiting-answers");
  EXPECT_EQ(state.body["pending_questions"].size(), 1u);
}

TEST(Service, UnknownSessionAndBadPayloads) {
  Service s(seed_catalog());
  EXPECT_EQ(s.get_session("nope").status, 404);
  EXPECT_EQ(s.result("nope").status, 404);
  EXPECT_EQ(s.answer("nope", "{}").status, 404);

  ServiceReply r = s.create_session("{not json");
  EXPECT_EQ(r.status, 400);
  r = s.create_session(body({{"text", "rāma"}}));
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["field"], "prose");
  r = s.create_session(body({{"prose", "rāma"}, {"max_permutations", -3}}));
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["field"], "max_permutations");
  r = s.create_session(body({{"prose", "rāma"}, {"families", {"sama", "epic"}}}));
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["field"], "families");
  r = s.create_session(body({{"prose", "rāma 7"}}));
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["field"], "prose");

  const std::string id = s.create_session(body({{"prose", "phale atra"}, {"max_permutations", 1}})).body["session_id"];
  r = s.answer(id, body({{"question", 0}}));
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["field"], "dual");
  r = s.answer(id, body({{"question", 5}, {"dual", true}}));
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["field"], "question");
}

TEST(Service, BatchParity) {
  // Same request through batch compose and through a session answered with
  // the batch default.
  const std::string prose = "phale atra vane gacchati";
  CompositionRequest req;
  req.prose = tokenize(prose);
  const json batch = to_json(Composer(seed_catalog()).compose(req));

  Service s(seed_catalog());
  const ServiceReply created = s.create_session(body({{"prose", prose}}));
  const std::string id = created.body["session_id"];
  json answers = json::array();
  for (const auto& q : created.body["pending_questions"]) answers.push_back({{"question", q["index"]}, {"dual", false}});
  ASSERT_EQ(s.answer(id, body({{"answers", answers}})).status, 200);
  EXPECT_EQ(s.result(id).body, batch);
}

TEST(Service, SessionsAreIsolated) {
  Service s(seed_catalog());
  const std::string a = s.create_session(body({{"prose", "phale atra"}, {"max_permutations", 1}})).body["session_id"];
  const std::string b = s.create_session(body({{"prose", "phale atra"}, {"max_permutations", 1}})).body["session_id"];
  ASSERT_NE(a, b);
  s.answer(b, body({{"question", 0}, {"dual", false}}));
  EXPECT_EQ(s.get_session(a).body["state"], "awaiting-answers");
  s.answer(a, body({{"question", 0}, {"dual", true}}));
  const std::string ta = flat(s.result(a).body["verse_text"]);
  const std::string tb = flat(s.result(b).body["verse_text"]);
  EXPECT_EQ(ta.find("phale'tra"), std::string::npos);
  EXPECT_NE(tb.find("phale'tra"), std::string::npos);
}

TEST(Service, ConcurrentSessions) {
  Service s(seed_catalog());
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      const bool dual = t % 2;
      const std::string id = s.create_session(body({{"prose", "phale atra"}, {"max_permutations", 1}})).body["session_id"];
      s.answer(id, body({{"question", 0}, {"dual", dual}}));
      const std::string text = flat(s.result(id).body["verse_text"]);
      ok[static_cast<std::size_t>(t)] = (text.find("phale'tra") == std::string::npos) == dual;
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) EXPECT_EQ(v, 1);
}

TEST(Service, ScanEndpoint) {
  Service s(seed_catalog());
  const ServiceReply r = s.scan(body({{"lines",
                                       {"vande gurūṇāṃ caraṇāravinde", "sandarśitasvātmasukhāvabodhe",
                                        "janasya ye jāṅgalikāyamāne", "saṃsārahālāhalamohaśāntyai"}}}));
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["padas"][0]["pattern"], "ggl ggl lgl gg");
  EXPECT_EQ(r.body["metre"]["name"], "Upajāti");
  EXPECT_EQ(s.scan(body({{"lines", 3}})).status, 400);
}

TEST(Service, HttpRoundTrip) {
  Service s(seed_catalog());
  httplib::Server server;
  s.mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/sessions", body({{"prose", "phale atra"}}), "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  const json c = json::parse(created->body);
  const std::string id = c["session_id"];
  auto answered = client.Post("/sessions/" + id + "/answers", body({{"question", 0}, {"dual", true}}),
                              "application/json");
  ASSERT_TRUE(answered);
  EXPECT_EQ(answered->status, 200);
  auto result = client.Get("/sessions/" + id + "/result");
  ASSERT_TRUE(result);
  EXPECT_EQ(result->status, 200);
  EXPECT_EQ(json::parse(result->body)["status"].is_string(), true);
  auto missing = client.Get("/sessions/unknown");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  auto scan = client.Post("/scan", body({{"text", "vande gurūṇāṃ caraṇāravinde"}}), "application/json");
  ASSERT_TRUE(scan);
  EXPECT_EQ(scan->status, 200);

  server.stop();
  th.join();
}
