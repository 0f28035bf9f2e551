#pragma once

// q-terms of the F3 connection matrices C_z and C_w in the basis 1, z, w, w^2,
// as obtained from Birkhoff factorization of the I-function.

#include "resmirror/geometry.hpp"

#include <vector>

namespace f3_connection {

struct Entry {
  resmirror::Insertion a, b;
  resmirror::BiDegree d;
  const char* value;
};

inline const resmirror::Insertion one{0, 0}, z{1, 0}, w{0, 1}, w2{0, 2};

inline const std::vector<Entry> cz = {
    {one, one, {1, 0}, "5"},      {one, one, {3, 1}, "1901"},  {one, z, {2, 1}, "-32"},     {one, w, {2, 1}, "39"},
    {one, w2, {1, 1}, "-6"},      {one, w2, {3, 2}, "-3105/2"}, {z, one, {2, 1}, "-32"},     {z, z, {1, 1}, "1"},
    {z, z, {3, 2}, "192"},        {z, w, {1, 1}, "-1"},        {z, w, {3, 2}, "-288"},      {z, w2, {2, 2}, "30"},
    {w, one, {2, 1}, "39"},       {w, z, {1, 1}, "-1"},        {w, z, {3, 2}, "-288"},      {w, w, {3, 2}, "413"},
    {w, w2, {2, 2}, "-36"},       {w2, one, {1, 1}, "-6"},     {w2, one, {3, 2}, "-3105/2"}, {w2, z, {2, 2}, "30"},
    {w2, w, {2, 2}, "-36"},       {w2, w2, {1, 2}, "9"},       {w2, w2, {3, 3}, "1296"},
};

inline const std::vector<Entry> cw = {
    {one, one, {3, 1}, "1901/3"}, {one, z, {2, 1}, "-16"},     {one, w, {2, 1}, "39/2"},    {one, w2, {1, 1}, "-6"},
    {one, w2, {3, 2}, "-1035"},   {z, one, {2, 1}, "-16"},     {z, z, {1, 1}, "1"},         {z, z, {3, 2}, "128"},
    {z, w, {1, 1}, "-1"},         {z, w, {3, 2}, "-192"},      {z, w2, {2, 2}, "30"},       {w, one, {2, 1}, "39/2"},
    {w, z, {1, 1}, "-1"},         {w, z, {3, 2}, "-192"},      {w, w, {3, 2}, "826/3"},     {w, w2, {0, 1}, "3"},
    {w, w2, {2, 2}, "-36"},       {w2, one, {1, 1}, "-6"},     {w2, one, {3, 2}, "-1035"},  {w2, z, {2, 2}, "30"},
    {w2, w, {0, 1}, "3"},         {w2, w, {2, 2}, "-36"},      {w2, w2, {1, 2}, "18"},      {w2, w2, {3, 3}, "1296"},
};

}  // namespace f3_connection
