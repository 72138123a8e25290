#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include <wittkit/cli.hpp>
#include <wittkit/error.hpp>
#include <wittkit/parse.hpp>
#include <wittkit/witt.hpp>

using namespace wittkit;
using json = nlohmann::json;

namespace
{

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string> &args)
{
    std::ostringstream o, e;
    const int code = cli::dispatch(args, o, e);
    return {code, o.str(), e.str()};
}

json result_of(const Run &r)
{
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("schema") == 1);
    return j.at("result");
}

} // namespace

TEST_CASE("ring specs")
{
    CHECK(parse_ring("Z").spec() == "Z");
    CHECK(parse_ring("Q").spec() == "Q");
    CHECK(parse_ring("Z/6").spec() == "Z/6");
    CHECK(parse_ring("F5").spec() == "F5");
    CHECK(parse_ring("F9").order() == 9);
    CHECK(parse_ring("F3^2").order() == 9);
    CHECK(parse_ring("Q(s)").kind() == RingKind::function_field);
    CHECK_THROWS_AS(parse_ring("F6"), ParseError);
    CHECK_THROWS_AS(parse_ring("R"), ParseError);
    CHECK_THROWS_AS(parse_ring("Z/"), ParseError);
}

TEST_CASE("expressions")
{
    const Ring K = parse_ring("Q(s,t)");
    const Elem s = K.variable(0), t = K.variable(1);
    CHECK(parse_elem(K, "2s + 3(t-1)") == K.from_int(2L) * s + K.from_int(3L) * (t - K.one()));
    CHECK(parse_elem(K, "s^-2") == (s * s).inv());
    CHECK(parse_elem(K, "(s+t)/(s-t)") == (s + t) / (s - t));
    CHECK(parse_elem(K, "-s**3") == -(s * s * s));
    CHECK(parse_elem(K, "1/2") == K.from_rational(Rat(1, 2)));
    CHECK_THROWS_AS(parse_elem(K, "u"), ParseError);
    CHECK_THROWS_AS(parse_elem(K, "s +"), ParseError);
    CHECK_THROWS_AS(parse_elem(K, "(s"), ParseError);

    const Ring F4 = parse_ring("F4");
    const Elem a = parse_elem(F4, "a");
    CHECK(a * a + a + F4.one() == F4.zero());
}

TEST_CASE("polynomials")
{
    const Ring F3 = parse_ring("F3");
    const SparsePoly f = parse_poly(F3, "x^2 + y*z - 2", {"x", "y", "z"});
    const SparsePoly g = parse_poly(F3, "x1^2 + x2 x3 + 1", {"x", "y", "z"});
    CHECK(f == g);
    CHECK_THROWS_AS(parse_poly(F3, "x/y", {"x", "y"}), ParseError);
    CHECK_THROWS_AS(parse_poly(F3, "x4", {"x", "y", "z"}), ParseError);
}

TEST_CASE("witt arithmetic from the command line")
{
    CHECK(result_of(run({"witt", "add", "--ring", "Q", "--len", "2", "[1,0]", "[1,0]"})) == json::parse("[2,-1]"));
    CHECK(result_of(run({"witt", "add", "--ring", "Q", "--len", "3", "[1,0,0]", "[1,0,0]"})) == json::parse("[2,-1,-2]"));
    // [1] + [1] = (0,1) in W_2(F_2)
    CHECK(result_of(run({"witt", "add", "--ring", "F2", "[1,0]", "[1,0]"})) == json::parse("[0,1]"));
    CHECK(result_of(run({"witt", "teich", "--ring", "Q", "--len", "3", "5"})) == json::parse("[5,0,0]"));
    CHECK(result_of(run({"witt", "ghost", "--ring", "Q", "[0,3,0,0]"})) == json::parse("[0,6,0,18]"));

    const Run text = run({"--format", "text", "witt", "mul", "--ring", "Z", "[2,1]", "[3,0]"});
    CHECK(text.code == 0);
    const Ring Z = Ring::integers();
    const WittVector w = witt_mul(WittVector(Z, {Z.from_int(2L), Z.one()}), WittVector(Z, {Z.from_int(3L), Z.zero()}));
    CHECK(json::parse(text.out) == json::parse("[" + w[1].to_string() + "," + w[2].to_string() + "]"));
}

TEST_CASE("bare generator names inside arrays")
{
    const json r = result_of(run({"witt", "add", "--ring", "F4", "[a,0]", "[\"a+1\",0]"}));
    CHECK(r.at(0) == 1);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"witt", "add", "--ring", "Q", "[1,0]"}).code == 2);
    CHECK(run({"witt", "add", "--ring", "Q", "[1,0]", "[1,0,0]"}).code == 1);
    CHECK(run({"witt", "frob", "--ring", "Q", "2", "[1,0,0,0]"}).code == 1);
    CHECK(run({"witt", "fromghost", "--ring", "Z/6", "[1,1]"}).code == 1);
    CHECK(run({"count", "--field", "Q", "--projective", "2"}).code == 1);
    CHECK(run({"--budget", "10", "count", "--field", "F5", "--projective", "3"}).code == 1);
    CHECK(run({"forms", "reciprocity", "--field", "Q", "--form", "1/s ds"}).code == 0);
    CHECK(run({"cycle", "modulus", "--curve", R"j({"x":"s","y":["(1+s^3)/(1+s^3+2*s^2)"],"modulus":2})j", "--modulus", "3"}).code == 3);
    const Run bad = run({"witt", "add", "--ring", "Q", "[1,0]", "[1,u]"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("u") != std::string::npos);
}

TEST_CASE("count output")
{
    CHECK(result_of(run({"count", "--field", "F2", "--projective", "2"})) == json::parse(R"({"N":[7]})"));
    const json e = result_of(run({"count", "--field", "F5", "--elliptic", "-1", "0", "--tower", "2"}));
    CHECK(e.at("N") == json::parse("[8,32]"));
    CHECK(e.at("elliptic").at("a_p") == -2);
}

TEST_CASE("cycles and forms")
{
    const std::string curve = R"j({"x":"s","y":["(1+s^3)/(1+s^3+2*s^2)"],"modulus":2,"field":"Q"})j";
    const json b = result_of(run({"cycle", "boundary", "--curve", curve}));
    CHECK(b.at("degree") == 0);
    const json ev = result_of(run({"forms", "eval", "--modulus", "2", "--cycle", R"({"curve":)" + curve + "}"}));
    CHECK(ev.at("witt") == json::parse("[0]"));
    const json one = result_of(run({"forms", "eval", "--modulus", "4", "--cycle", R"({"field":"Q","points":[{"coords":[-1]}]})"}));
    CHECK(one.at("witt") == json::parse("[-1,0,0]"));
    const json d = result_of(run({"forms", "dlog", "--field", "Q(s)", "s"}));
    CHECK(d.at("agree") == true);
    CHECK(d.at("form").at("text") == d.at("eval").at("text"));
}

TEST_CASE("corpus output is reproducible")
{
    const Run a = run({"corpus", "run", "--suite", "witt"});
    const Run b = run({"corpus", "run", "--suite", "witt"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Run c = run({"--seed", "7", "corpus", "run", "--suite", "witt"});
    CHECK(json::parse(c.out).at("result").at("suites").at(0).at("seed") != json::parse(a.out).at("result").at("suites").at(0).at("seed"));
    CHECK(cli::suite_seed(42, "witt") != cli::suite_seed(42, "count"));
    CHECK(run({"corpus", "run", "--suite", "nope"}).code == 2);
}
