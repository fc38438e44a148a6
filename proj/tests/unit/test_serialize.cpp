#include <doctest.h>

#include "netfit/error.hpp"
#include "netfit/serialize.hpp"

using namespace netfit;

TEST_CASE("model parameters round trip") {
    JointDegreeMatrix jdm;
    jdm.add(1, 2, 2);
    jdm.add(2, 2, 1);
    const ModelParams all[] = {WsParams{30, 4, 0.125}, CbaParams{40, 2, 0.3}, DdParams{50, 0.7},
                               CommunityParams{{3, 4, 5}, 0.5, 0.01}, TwoKParams{jdm}};
    for (const auto& p : all) {
        const auto json = model_params_json(p, 99);
        CHECK(json.at("seed").get<Seed>() == 99);
        CHECK(json.at("model").get<std::string>() == model_name(p));
        const auto back = model_params_from_json(Json::parse(json.dump()));
        CHECK(back == p);
    }
}

TEST_CASE("model parameter JSON shape") {
    const auto json = model_params_json(WsParams{10, 4, 0.5});
    CHECK(json == Json::parse(R"({"model":"WS","params":{"n":10,"K":4,"p":0.5}})"));
    JointDegreeMatrix jdm;
    jdm.add(2, 2, 3);
    CHECK(model_params_json(TwoKParams{jdm}).at("params").at("jdm") == Json::parse("[[2,2,3]]"));
}

TEST_CASE("fit report round trip") {
    FitReport r;
    r.model = "WS_STD";
    r.params = WsParams{100, 6, 0.0123456789};
    r.objective_value = 0.001;
    r.evaluations = 33;
    r.replicates_per_eval = 5;
    r.master_seed = 18446744073709551615ULL;
    r.notes = {"K rounded"};
    const auto back = fit_report_from_json(Json::parse(dump_json(fit_report_json(r))));
    CHECK(back.model == r.model);
    CHECK(back.params == r.params);
    CHECK(back.objective_value == r.objective_value);
    CHECK(back.evaluations == 33);
    CHECK(back.master_seed == r.master_seed);
    CHECK(back.notes == r.notes);
}

TEST_CASE("malformed parameter JSON") {
    CHECK_THROWS_AS(model_params_from_json(Json::parse(R"({"model":"XX","params":{}})")), ParseError);
    CHECK_THROWS_AS(model_params_from_json(Json::parse(R"({"model":"WS","params":{"n":10}})")), ParseError);
    CHECK_THROWS_AS(model_params_from_json(Json::parse(R"({"model":"WS","params":{"n":"ten","K":2,"p":0}})")),
                    ParseError);
    CHECK_THROWS_AS(model_params_from_json(Json::parse(R"({"model":"2K","params":{"jdm":[[1,2]]}})")), ParseError);
    CHECK_THROWS_AS(model_params_from_json(Json::parse("[1,2]")), ParseError);
}

TEST_CASE("eval report JSON") {
    EvalReport r;
    r.task = "category";
    r.classifier = "forest";
    r.class_names = {"real", "model"};
    r.feature_names = {"a", "b"};
    r.split_counts = {3, 4};
    r.confusion = {{1, 0}, {0, 1}};
    r.auc = 1.0;
    const auto json = eval_report_json(r);
    CHECK(json.at("auc").get<double>() == 1.0);
    CHECK(json.at("split_counts").at("b").get<int>() == 4);
    CHECK(json.at("confusion") == Json::parse("[[1,0],[0,1]]"));
    CHECK(json.at("mean_fold_auc").is_null());
}
