#pragma once

// Published values used by the unit and acceptance tests.

#include "resmirror/geometry.hpp"

#include <string>
#include <vector>

namespace fixtures {

using resmirror::BiDegree;
using resmirror::Insertion;
using resmirror::Rational;

struct Value {
  int N, k, d, a, b;
  const char* value;
};

struct Term {
  int da, db;
  const char* coef;
};

// Affine part x1*(x1_k*k + x1_c) + x2*(x2_k*k + x2_c); k only matters for kf0.
struct SeriesFixture {
  const char* name;
  const char* geometry;
  Insertion a, b;
  int x1_k, x2_k;
  const char* x1_c;
  const char* x2_c;
  std::vector<Term> terms;
};

inline const std::vector<Value> cpn_75 = {
    {7, 5, 1, 1, 5, "600"},    {7, 5, 1, 2, 4, "3850"},    {7, 5, 1, 3, 3, "6725"},
    {7, 5, 2, 3, 5, "528000"}, {7, 5, 2, 4, 4, "1731250"}, {7, 5, 3, 5, 5, "52200000"},
};

inline const std::vector<Value> cpn_55 = {
    {5, 5, 1, 0, 2, "3850"}, {5, 5, 2, 0, 2, "3589125"},    {5, 5, 3, 0, 2, "16126540000/3"},
    {5, 5, 1, 1, 1, "6725"}, {5, 5, 2, 1, 1, "16482625/2"}, {5, 5, 3, 1, 1, "44704818125/3"},
};

inline const std::vector<const char*> quintic_mirror = {"770", "717825", "3225308000/3"};
inline const std::vector<const char*> quintic_gw = {"2875", "4876875/2", "8564575000/3"};

inline const std::vector<Value> cpn_89 = {
    {8, 9, 1, 0, 4, "307250172"},
    {8, 9, 1, 1, 3, "817713468"},
    {8, 9, 1, 2, 2, "1122806529"},
    {8, 9, 2, 0, 3, "75644409992388462"},
    {8, 9, 2, 1, 2, "733562379269675757/4"},
    {8, 9, 3, 0, 2, "34343397483304162555939158"},
    {8, 9, 3, 1, 1, "56677396498174471672277559"},
};

inline const std::vector<Value> gw_89 = {
    {8, 9, 1, 0, 4, "0"},
    {8, 9, 1, 1, 3, "510463296"},
    {8, 9, 1, 2, 2, "815556357"},
    {8, 9, 2, 0, 3, "0"},
    {8, 9, 2, 1, 2, "319615925538369285/4"},
    {8, 9, 3, 0, 2, "0"},
    {8, 9, 3, 1, 1, "12112667926597160835676659"},
};

// kf0 two-point generating functions through total degree 4.
inline const std::vector<SeriesFixture> kf0_w = {
    {"w(1,zw)", "kf0", {0, 0}, {1, 1}, -1, 1, "0", "-1/2",
     {{1, 0, "-1"},    {0, 1, "-1"},    {2, 0, "-3/2"},  {1, 1, "-6"},    {0, 2, "-3/2"},
      {3, 0, "-10/3"}, {2, 1, "-30"},   {1, 2, "-30"},   {0, 3, "-10/3"}, {4, 0, "-35/4"},
      {3, 1, "-140"},  {2, 2, "-315"},  {1, 3, "-140"},  {0, 4, "-35/4"}}},
    {"w(z,z)", "kf0", {1, 0}, {1, 0}, 1, -1, "0", "0",
     {{1, 0, "-2"}, {2, 0, "-5"}, {1, 1, "-8"}, {3, 0, "-44/3"}, {2, 1, "-76"}, {1, 2, "-32"},
      {4, 0, "-93/2"}, {3, 1, "-504"}, {2, 2, "-672"}, {1, 3, "-128"}}},
    {"w(z,w)", "kf0", {1, 0}, {0, 1}, -1, 1, "0", "-1/2",
     {{1, 0, "-1"},    {0, 1, "-1"},    {2, 0, "-3/2"},  {1, 1, "-10"},   {0, 2, "-3/2"},
      {3, 0, "-10/3"}, {2, 1, "-58"},   {1, 2, "-58"},   {0, 3, "-10/3"}, {4, 0, "-35/4"},
      {3, 1, "-292"},  {2, 2, "-749"},  {1, 3, "-292"},  {0, 4, "-35/4"}}},
};

inline const std::vector<Term> kf0_mirror = {
    {1, 0, "2"},    {0, 1, "2"},   {2, 0, "3"},   {1, 1, "12"},  {0, 2, "3"},
    {3, 0, "20/3"}, {2, 1, "60"},  {1, 2, "60"},  {0, 3, "20/3"}, {4, 0, "35/2"},
    {3, 1, "280"},  {2, 2, "630"}, {1, 3, "280"}, {0, 4, "35/2"},
};

// Transformed kf0 series, all printed terms (through total degree 4).
inline const std::vector<SeriesFixture> kf0_gw = {
    {"<z,z>", "kf0", {1, 0}, {1, 0}, 1, -1, "0", "0",
     {{1, 0, "-2"}, {2, 0, "-1"}, {1, 1, "-4"}, {3, 0, "-2/3"}, {2, 1, "-24"}, {1, 2, "-6"},
      {4, 0, "-1/2"}, {1, 3, "-8"}, {3, 1, "-72"}, {2, 2, "-130"}}},
    {"<z,w>", "kf0", {1, 0}, {0, 1}, -1, 1, "0", "-1/2",
     {{1, 1, "-4"}, {2, 1, "-12"}, {1, 2, "-12"}, {1, 3, "-24"}, {2, 2, "-130"}, {3, 1, "-24"}}},
};

struct F3Value {
  BiDegree d;
  Insertion a, b;
  const char* value;
};

inline const std::vector<F3Value> f3_w = {
    {{1, 0}, {0, 0}, {0, 0}, "5"},      {{0, 1}, {0, 1}, {0, 2}, "3"},     {{1, 1}, {0, 0}, {0, 2}, "-6"},
    {{1, 1}, {1, 0}, {1, 0}, "1"},      {{1, 1}, {1, 0}, {0, 1}, "-1"},    {{2, 1}, {0, 0}, {1, 0}, "-16"},
    {{2, 1}, {0, 0}, {0, 1}, "39/2"},   {{3, 1}, {0, 0}, {0, 0}, "1901/3"}, {{2, 2}, {1, 0}, {0, 2}, "15"},
    {{2, 2}, {0, 1}, {0, 2}, "-18"},    {{3, 2}, {0, 0}, {0, 2}, "-1035/2"}, {{3, 2}, {1, 0}, {1, 0}, "64"},
    {{3, 2}, {1, 0}, {0, 1}, "-96"},    {{3, 2}, {0, 1}, {0, 1}, "413/3"}, {{3, 3}, {0, 2}, {0, 2}, "432"},
};

// q-terms of the connection matrices C_z = B_z eta and C_w = B_w eta
// (basis 1, z, w, w^2). Constant entries are classical and not listed.
struct MatrixEntry {
  Insertion a, b;
  BiDegree d;
  const char* value;
};

inline const Insertion one{0, 0}, z{1, 0}, w{0, 1}, w2{0, 2};

inline const std::vector<MatrixEntry> f3_cz = {
    {one, one, {1, 0}, "5"},       {one, one, {3, 1}, "1901"},     {one, z, {2, 1}, "-32"},
    {one, w, {2, 1}, "39"},        {one, w2, {1, 1}, "-6"},        {one, w2, {3, 2}, "-3105/2"},
    {z, one, {2, 1}, "-32"},       {z, z, {1, 1}, "1"},            {z, z, {3, 2}, "192"},
    {z, w, {1, 1}, "-1"},          {z, w, {3, 2}, "-288"},         {z, w2, {2, 2}, "30"},
    {w, one, {2, 1}, "39"},        {w, z, {1, 1}, "-1"},           {w, z, {3, 2}, "-288"},
    {w, w, {3, 2}, "413"},         {w, w2, {2, 2}, "-36"},         {w2, one, {1, 1}, "-6"},
    {w2, one, {3, 2}, "-3105/2"},  {w2, z, {2, 2}, "30"},          {w2, w, {2, 2}, "-36"},
    {w2, w2, {1, 2}, "9"},         {w2, w2, {3, 3}, "1296"},
};

inline const std::vector<MatrixEntry> f3_cw = {
    {one, one, {3, 1}, "1901/3"},  {one, z, {2, 1}, "-16"},        {one, w, {2, 1}, "39/2"},
    {one, w2, {1, 1}, "-6"},       {one, w2, {3, 2}, "-1035"},     {z, one, {2, 1}, "-16"},
    {z, z, {1, 1}, "1"},           {z, z, {3, 2}, "128"},          {z, w, {1, 1}, "-1"},
    {z, w, {3, 2}, "-192"},        {z, w2, {2, 2}, "30"},          {w, one, {2, 1}, "39/2"},
    {w, z, {1, 1}, "-1"},          {w, z, {3, 2}, "-192"},         {w, w, {3, 2}, "826/3"},
    {w, w2, {0, 1}, "3"},          {w, w2, {2, 2}, "-36"},         {w2, one, {1, 1}, "-6"},
    {w2, one, {3, 2}, "-1035"},    {w2, z, {2, 2}, "30"},          {w2, w, {0, 1}, "3"},
    {w2, w, {2, 2}, "-36"},        {w2, w2, {1, 2}, "18"},         {w2, w2, {3, 3}, "1296"},
};

inline const std::vector<SeriesFixture> wp1_w = {
    {"w(1,w2)", "wp1", {0, 0}, {0, 2}, 0, 0, "4", "8",
     {{0, 1, "1024"}, {0, 2, "103872"}, {0, 3, "46099456/3"}, {1, 2, "216576"}}},
    {"w(1,zw)", "wp1", {0, 0}, {1, 1}, 0, 0, "0", "4",
     {{0, 1, "416"}, {1, 0, "-4"}, {0, 2, "39120"}, {2, 0, "-6"}, {1, 1, "192"}, {0, 3, "16567040/3"},
      {3, 0, "-40/3"}, {1, 2, "133920"}, {2, 1, "192"}}},
    {"w(z,z)", "wp1", {1, 0}, {1, 0}, 0, 0, "0", "0",
     {{1, 0, "4"}, {2, 0, "10"}, {1, 1, "832"}, {3, 0, "88/3"}, {1, 2, "199744"}, {2, 1, "832"}}},
    {"w(w,w)", "wp1", {0, 1}, {0, 1}, 0, 0, "4", "8",
     {{0, 1, "1664"}, {0, 2, "210880"}, {0, 3, "108286976/3"}, {1, 2, "486016"}}},
    {"w(z,w)", "wp1", {1, 0}, {0, 1}, 0, 0, "0", "4",
     {{0, 1, "416"}, {1, 0, "-4"}, {0, 2, "39120"}, {2, 0, "-6"}, {1, 1, "832"}, {0, 3, "16567040/3"},
      {3, 0, "-40/3"}, {1, 2, "375648"}, {2, 1, "832"}}},
};

inline const std::vector<Term> wp1_t1 = {{0, 1, "48"}, {0, 2, "6408"}, {0, 3, "1080448"}, {1, 2, "-12816"}, {1, 0, "2"},
                                         {2, 0, "3"},  {1, 1, "-96"},  {3, 0, "20/3"},    {2, 1, "-96"}};
inline const std::vector<Term> wp1_t2 = {{0, 1, "104"},       {1, 0, "-1"},    {0, 2, "9780"},  {2, 0, "-3/2"},
                                         {1, 1, "48"},        {0, 3, "4141760/3"}, {3, 0, "-10/3"}, {1, 2, "33480"},
                                         {2, 1, "48"}};

// Transformed wp1 series. The printed block pairs the three coefficient
// lists with the insertions (z,z), (z,w), (w,w) in rotated order; the
// lists are attached here to the pairs whose classical terms they carry.
inline const std::vector<SeriesFixture> wp1_gw = {
    {"<w,w>", "wp1", {0, 1}, {0, 1}, 0, 0, "4", "8",
     {{0, 1, "640"}, {0, 2, "40448"}, {1, 1, "640"}, {0, 3, "7787008/3"}, {1, 2, "288896"}}},
    {"<z,z>", "wp1", {1, 0}, {1, 0}, 0, 0, "0", "0",
     {{1, 0, "4"}, {1, 1, "640"}, {2, 0, "2"}, {1, 2, "72224"}, {3, 0, "4/3"}}},
    {"<z,w>", "wp1", {1, 0}, {0, 1}, 0, 0, "0", "4", {{1, 1, "640"}, {1, 2, "144448"}}},
};

inline const std::vector<SeriesFixture> wp3_w = {
    {"w(1,w2)", "wp3", {0, 0}, {0, 2}, 0, 0, "2", "4",
     {{0, 1, "3456"}, {0, 2, "2335968"}, {0, 3, "2313054720"}, {1, 2, "4836096"}}},
    {"w(1,zw)", "wp3", {0, 0}, {1, 1}, 0, 0, "0", "2",
     {{0, 1, "1488"}, {1, 0, "-2"}, {0, 2, "947304"}, {2, 0, "-3"}, {1, 1, "480"}, {0, 3, "903468160"},
      {3, 0, "-20/3"}, {1, 2, "2859408"}, {2, 1, "480"}}},
    {"w(z,z)", "wp3", {1, 0}, {1, 0}, 0, 0, "0", "0",
     {{1, 0, "2"}, {2, 0, "5"}, {1, 1, "2976"}, {3, 0, "44/3"}, {1, 2, "4896288"}, {2, 1, "2976"}}},
    {"w(w,w)", "wp3", {0, 1}, {0, 1}, 0, 0, "2", "4",
     {{0, 1, "5952"}, {0, 2, "5089248"}, {0, 3, "5867470336"}, {1, 2, "12006720"}}},
    {"w(z,w)", "wp3", {1, 0}, {0, 1}, 0, 0, "0", "2",
     {{0, 1, "1488"}, {1, 0, "-2"}, {0, 2, "947304"}, {2, 0, "-3"}, {1, 1, "2976"}, {0, 3, "903468160"},
      {3, 0, "-20/3"}, {1, 2, "9198000"}, {2, 1, "2976"}}},
};

inline const std::vector<const char*> j_coeffs = {"744", "196884", "21493760", "864299970", "20245856256", "333202640600"};
inline const std::vector<const char*> w_coeffs = {"744", "473652", "451734080", "510531007770", "3169342733223744/5"};

}  // namespace fixtures
