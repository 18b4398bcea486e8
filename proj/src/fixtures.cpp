#include "qinv/fixtures.hpp"

#include <stdexcept>

namespace qinv::fixtures
{

namespace
{

// Two-crossing clasp shared by several entries.
constexpr const char* kHopfCrossings = "x 1 3 2 4\nx 3 1 4 2\n";

std::string hopf(const char* first, const char* second)
{
    return std::string("component 1 ") + first + " arcs=1,2\ncomponent 2 " + second + " arcs=3,4\n" + kHopfCrossings;
}

// Closure of s1^2 s2^2: component 1 is the middle ring.
std::string chain3(const char* middle, const char* left, const char* right)
{
    return std::string("component 1 ") + middle + " arcs=1,2,3,4\ncomponent 2 " + left + " arcs=5,6\ncomponent 3 " +
           right + " arcs=7,8\nx 1 5 2 6\nx 5 3 6 2\nx 7 4 8 3\nx 4 7 1 8\n";
}

// Closure of s1^2 s2^2 s3^2: linear order is 2 - 1 - 3 - 4.
std::string chain4(const char* framing)
{
    std::string f = std::string(" ") + framing;
    return "component 1" + f + " arcs=1,2,3,4\ncomponent 2" + f + " arcs=5,6\ncomponent 3" + f +
           " arcs=7,8,9,10\ncomponent 4" + f +
           " arcs=11,12\nx 1 5 2 6\nx 5 3 6 2\nx 7 4 8 3\nx 4 9 1 8\nx 11 10 12 9\nx 10 11 7 12\n";
}

const char* kTrefoil = "component 1 framing=0 arcs=1,2,3,4,5,6\nx 1 4 2 5\nx 3 6 4 1\nx 5 2 6 3\n";

const char* kWhitehead = "component 1 framing=0 arcs=1,2,3,4\n"
                         "component 2 framing=0 arcs=5,6,7,8,9,10\n"
                         "x 6 1 7 2\nx 10 7 5 8\nx 4 5 1 6\nx 2 10 3 9\nx 8 4 9 3\n";

std::vector<Entry> make_links()
{
    return {
        {"unknot", "component 1 framing=0 arcs=loop\n"},
        {"unlink2", "component 1 framing=0 arcs=loop\ncomponent 2 framing=0 arcs=loop\n"},
        {"hopf", hopf("framing=0", "framing=0")},
        {"trefoil", kTrefoil},
        {"trefoil_right", "component 1 framing=0 arcs=1,2,3,4,5,6\nx 4 2 5 1\nx 6 4 1 3\nx 2 6 3 5\n"},
        {"figure_eight", "component 1 framing=0 arcs=1,2,3,4,5,6,7,8\n"
                         "x 4 2 5 1\nx 8 6 1 5\nx 6 3 7 4\nx 2 7 3 8\n"},
        {"cinquefoil", "component 1 framing=0 arcs=1,2,3,4,5,6,7,8,9,10\n"
                       "x 1 6 2 7\nx 3 8 4 9\nx 5 10 6 1\nx 7 2 8 3\nx 9 4 10 5\n"},
        {"knot_6_2", "component 1 framing=0 arcs=1,2,3,4,5,6,7,8,9,10,11,12\n"
                     "x 1 4 2 5\nx 5 10 6 11\nx 3 9 4 8\nx 9 3 10 2\nx 7 12 8 1\nx 11 6 12 7\n"},
        {"whitehead", kWhitehead},
        // closure of (s1 s2^-1)^3
        {"borromean", "component 1 framing=0 arcs=1,2,3,4\n"
                      "component 2 framing=0 arcs=5,6,7,8\n"
                      "component 3 framing=0 arcs=9,10,11,12\n"
                      "x 1 5 2 8\nx 5 9 6 10\nx 10 3 11 2\nx 3 6 4 7\nx 7 12 8 11\nx 12 4 9 1\n"},
        // closure of (s1 s2^-1)^6
        {"braid12", "component 1 framing=0 arcs=1,2,3,4,5,6,7,8\n"
                    "component 2 framing=0 arcs=9,10,11,12,13,14,15,16\n"
                    "component 3 framing=0 arcs=17,18,19,20,21,22,23,24\n"
                    "x 1 9 2 16\nx 9 17 10 18\nx 18 3 19 2\nx 3 10 4 11\nx 11 20 12 19\nx 20 4 21 5\n"
                    "x 5 13 6 12\nx 13 21 14 22\nx 22 7 23 6\nx 7 14 8 15\nx 15 24 16 23\nx 24 8 17 1\n"},
    };
}

std::vector<Entry> make_surgery()
{
    std::string tref_m1 = kTrefoil;
    tref_m1.replace(tref_m1.find("framing=0"), 9, "framing=-1");
    std::string wh = kWhitehead;
    wh.replace(wh.find("framing=0"), 9, "framing=1");
    return {
        {"s3_empty", ""},
        {"s3_plus", "component 1 framing=1 arcs=loop\n"},
        {"s3_minus", "component 1 framing=-1 arcs=loop\n"},
        {"s1s2", "component 1 framing=0 arcs=loop\n"},
        {"lens2", "component 1 framing=2 arcs=loop\n"},
        {"lens3", "component 1 framing=3 arcs=loop\n"},
        {"lens4", "component 1 framing=4 arcs=loop\n"},
        {"lens2_chain", "component 1 framing=-2 arcs=loop\n"},
        {"lens3_chain", hopf("framing=-2", "framing=-2")},
        {"lens4_chain", chain3("framing=-2", "framing=-2", "framing=-2")},
        {"lens5_chain", chain4("framing=-2")},
        {"hopf_m1_2", hopf("framing=-1", "framing=2")},
        {"hopf_p1_p1", hopf("framing=1", "framing=1")},
        {"hopf_0_0", hopf("framing=0", "framing=0")},
        {"poincare", tref_m1},
        {"whitehead_1_0", wh},
        // closure of s1^4, both framings +1
        {"torus_4_2", "component 1 framing=1 arcs=1,2,3,4\ncomponent 2 framing=1 arcs=5,6,7,8\n"
                      "x 1 5 2 8\nx 5 3 6 2\nx 3 7 4 6\nx 7 1 8 4\n"},
        {"barred_unknot", "component 1 framing=0 barred color=2 arcs=loop\n"},
        {"s1s2_barred_meridian", hopf("framing=0", "framing=0 barred color=1")},
    };
}

std::vector<Entry> make_special()
{
    return {
        {"s4_empty", ""},
        {"cp2", "component 1 framing=1 arcs=loop\n"},
        {"cp2_bar", "component 1 framing=-1 arcs=loop\n"},
        {"cp2_keychain", chain3("framing=0 dotted", "framing=0", "framing=1")},
        {"s4_cancel", hopf("framing=0 dotted", "framing=0")},
        {"hopf_pp", hopf("framing=1", "framing=1")},
        {"u1_u0", "component 1 framing=1 arcs=loop\ncomponent 2 framing=0 arcs=loop\n"},
        {"s1s3", "component 1 framing=0 dotted arcs=loop\n"},
        {"s1s3_cancel", "component 1 framing=0 dotted arcs=loop\ncomponent 2 framing=0 dotted arcs=1,2\n"
                        "component 3 framing=0 arcs=3,4\n" +
                            std::string(kHopfCrossings)},
        {"s1s3_chain", chain3("framing=0", "framing=0 dotted", "framing=0 dotted")},
    };
}


} // namespace

const std::vector<Entry>& links()
{
    static const std::vector<Entry> table = make_links();
    return table;
}

const std::vector<Entry>& surgery()
{
    static const std::vector<Entry> table = make_surgery();
    return table;
}

const std::vector<Entry>& special()
{
    static const std::vector<Entry> table = make_special();
    return table;
}

const std::string& text(std::string_view name)
{
    for (const auto* table : {&links(), &surgery(), &special()})
        for (const auto& e : *table)
            if (e.name == name)
                return e.text;
    throw std::out_of_range("unknown fixture " + std::string(name));
}

Diagram get(std::string_view name)
{
    return Diagram::parse(text(name));
}

const std::vector<Pair>& kirby_pairs()
{
    static const std::vector<Pair> pairs = {
        {"s3_empty", "s3_plus", "blow-up of the empty link"},
        {"lens2", "lens2_chain", "L(2,1): +2 unknot vs -2 unknot"},
        {"lens3", "lens3_chain", "L(3,1): +3 unknot vs chain of two -2 unknots"},
        {"lens4", "lens4_chain", "L(4,1): +4 unknot vs chain of three -2 unknots"},
        {"lens3", "hopf_m1_2", "blow-down of a -1 meridian"},
        {"s1s2", "hopf_p1_p1", "blow-down of a +1 meridian"},
        {"s3_empty", "hopf_0_0", "cancelling 0-framed Hopf link"},
    };
    return pairs;
}

const std::vector<Pair>& fourman_pairs()
{
    static const std::vector<Pair> pairs = {
        {"s4_empty", "s4_cancel", "1-handle cancelled by a 0-framed meridian"},
        {"cp2", "cp2_keychain", "cancelling pair slid in"},
        {"hopf_pp", "u1_u0", "slide of one +1 handle over the other"},
        {"s1s3", "s1s3_cancel", "extra cancelling 1/2-handle pair"},
        {"s1s3", "s1s3_chain", "2-handle over two 1-handles cancels one of them"},
    };
    return pairs;
}

} // namespace qinv::fixtures
