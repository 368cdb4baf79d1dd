#include "tpm/catalog.hpp"

#include <stdexcept>

namespace tpm::catalog {

namespace {

struct Row {
    int number;
    int order;
    int size;
    std::vector<int> p;
    std::vector<int> v;
    const char* serial;
};

// Rows 23 and 44 were wrapped across two lines in the source table and are
// joined here.
const std::vector<Row>& rows() {
    static const std::vector<Row> data = {
    {1, 7, 14, {14,0}, {0,0,0,7},
     "[7, 0, -1, 1, 4, 5, -1, 1, 5, 2, -1, 2, 5, 3, -1, 5, 6, 3, -1, 3, 6, 1, -1, 6, 4, 1, -1, 4, 7, 5, -1, 5, 7, 6, -1, 7, 1, 2, -1, 6, 7, 2, -1, 6, 2, 4, -1, 4, 2, 3, -1, 4, 3, 7, -1, 7, 3, 1, -1]"},
    {2, 8, 12, {8,4}, {0,2,4,2},
     "[8, 0, -1, 6, 4, 1, 2, -1, 6, 2, 8, 7, -1, 7, 1, 4, -1, 1, 5, 3, 2, -1, 8, 2, 3, -1, 8, 5, 1, 7, -1, 4, 5, 8, -1, 3, 6, 7, -1, 7, 4, 3, -1, 4, 8, 3, -1, 6, 5, 4, -1, 3, 5, 6, -1]"},
    {3, 8, 13, {10,3}, {1,0,3,4},
     "[8, 0, -1, 8, 6, 1, 2, -1, 8, 2, 3, -1, 6, 5, 3, 1, -1, 4, 2, 1, -1, 2, 7, 3, -1, 1, 3, 7, -1, 5, 7, 2, -1, 4, 8, 3, -1, 4, 1, 7, -1, 3, 5, 4, -1, 5, 2, 4, -1, 8, 7, 5, 6, -1, 4, 7, 8, -1]"},
    {4, 9, 11, {4,7}, {0,5,4},
     "[9, 0, -1, 8, 7, 1, 4, -1, 3, 4, 1, 2, -1, 2, 6, 7, 8, -1, 9, 1, 7, -1, 5, 2, 1, 9, -1, 2, 5, 6, -1, 6, 5, 4, 3, -1, 3, 2, 8, -1, 9, 7, 6, 3, -1, 4, 5, 9, 8, -1, 8, 9, 3, -1]"},
    {5, 9, 11, {4,7}, {1,3,5},
     "[9, 0, -1, 9, 7, 1, 4, -1, 3, 4, 1, 2, -1, 2, 6, 7, 9, -1, 8, 1, 7, 6, -1, 5, 2, 1, 8, -1, 2, 5, 6, -1, 6, 5, 4, 3, -1, 3, 2, 9, -1, 8, 6, 3, -1, 4, 5, 8, 9, -1, 9, 8, 3, -1]"},
    {6, 9, 11, {1,4,3,1}, {5,5,1},
     "[9, 0, -1, 9, 8, 1, 4, 7, -1, 4, 1, 2, 3, -1, 3, 2, 9, -1, 8, 6, 1, -1, 5, 2, 1, 6, -1, 9, 2, 5, 8, -1, 8, 5, 3, -1, 7, 6, 3, 9, -1, 6, 8, 3, -1, 4, 3, 5, -1, 7, 4, 5, 6, -1]"},
    {7, 9, 11, {1,4,3,1}, {5,5,1},
     "[9, 0, -1, 4, 9, 8, 1, 6, -1, 1, 2, 3, 6, -1, 4, 3, 2, 9, -1, 5, 1, 8, -1, 7, 2, 1, 5, -1, 9, 2, 7, 8, -1, 8, 7, 3, -1, 5, 8, 3, -1, 6, 7, 5, 4, -1, 3, 4, 5, -1, 6, 3, 7, -1]"},
    {8, 9, 11, {6,3,2}, {2,2,4,1},
     "[9, 0, -1, 6, 3, 4, 5, 1, -1, 6, 1, 8, 9, -1, 9, 4, 3, 2, -1, 5, 7, 2, 1, -1, 8, 1, 2, -1, 4, 9, 8, 7, 5, -1, 3, 7, 8, -1, 6, 9, 2, -1, 3, 8, 2, -1, 2, 7, 6, -1, 7, 3, 6, -1]"},
    {9, 9, 12, {6,6}, {0,3,6},
     "[9, 0, -1, 6, 4, 1, 7, -1, 7, 9, 2, 3, -1, 4, 3, 2, 1, -1, 8, 7, 1, 5, -1, 5, 2, 9, 6, -1, 2, 5, 1, -1, 6, 9, 4, -1, 7, 3, 6, -1, 3, 8, 5, 6, -1, 3, 4, 8, -1, 4, 9, 8, -1, 9, 7, 8, -1]"},
    {10, 9, 12, {6,6}, {2,0,6,1},
     "[9, 0, -1, 9, 3, 1, 7, -1, 9, 7, 6, 2, -1, 2, 1, 3, 5, -1, 6, 7, 1, 4, -1, 6, 8, 2, -1, 1, 2, 8, -1, 3, 8, 6, -1, 4, 9, 2, 5, -1, 4, 1, 8, -1, 5, 3, 6, 4, -1, 9, 8, 3, -1, 4, 8, 9, -1]"},
    {11, 9, 12, {6,6}, {2,1,4,2},
     "[9, 0, -1, 2, 5, 7, 1, -1, 2, 1, 9, 3, -1, 8, 6, 7, 5, -1, 7, 6, 4, 1, -1, 9, 1, 4, 8, -1, 6, 8, 2, -1, 2, 8, 4, -1, 6, 2, 3, -1, 9, 8, 5, 3, -1, 3, 4, 6, -1, 5, 4, 3, -1, 2, 4, 5, -1]"},
    {12, 9, 12, {7,4,1}, {2,1,4,2},
     "[9, 0, -1, 8, 5, 7, 1, 9, -1, 9, 1, 2, 3, -1, 5, 2, 6, 7, -1, 7, 6, 4, 1, -1, 1, 4, 2, -1, 6, 2, 8, -1, 8, 2, 4, -1, 9, 3, 6, 8, -1, 3, 2, 5, -1, 3, 4, 6, -1, 5, 4, 3, -1, 8, 4, 5, -1]"},
    {13, 10, 10, {0,10}, {0,10},
     "[10, 0, -1, 1, 4, 5, 2, -1, 2, 5, 6, 3, -1, 6, 8, 4, 3, -1, 4, 1, 7, 3, -1, 2, 9, 10, 1, -1, 10, 9, 6, 5, -1, 4, 8, 10, 5, -1, 8, 7, 1, 10, -1, 3, 7, 9, 2, -1, 7, 8, 6, 9, -1]"},
    {14, 10, 10, {1,8,1}, {2,6,2},
     "[10, 0, -1, 1, 4, 5, 2, -1, 2, 8, 9, 7, -1, 2, 7, 10, 1, -1, 10, 7, 6, 5, -1, 7, 9, 3, 6, -1, 9, 4, 1, 3, -1, 3, 1, 10, 8, -1, 10, 5, 4, 9, 8, -1, 8, 2, 3, -1, 2, 5, 6, 3, -1]"},
    {15, 10, 10, {2,6,2}, {1,8,1},
     "[10, 0, -1, 1, 4, 5, 2, -1, 2, 8, 9, 7, -1, 2, 7, 10, 1, -1, 10, 7, 6, 5, -1, 7, 9, 4, 3, 6, -1, 4, 1, 3, -1, 4, 9, 8, 10, 5, -1, 8, 3, 1, 10, -1, 8, 2, 6, 3, -1, 2, 5, 6, -1]"},
    {16, 10, 10, {2,6,2}, {2,6,2},
     "[10, 0, -1, 1, 4, 5, 2, -1, 2, 5, 6, 3, -1, 1, 2, 8, 9, -1, 9, 8, 6, 5, -1, 1, 9, 10, 3, -1, 10, 9, 5, 4, 7, -1, 3, 10, 7, 8, 2, -1, 7, 6, 8, -1, 3, 6, 1, -1, 6, 7, 4, 1, -1]"},
    {17, 10, 10, {2,6,2}, {2,6,2},
     "[10, 0, -1, 1, 4, 5, 2, -1, 2, 5, 6, 3, -1, 1, 2, 9, 10, -1, 10, 9, 6, 5, -1, 4, 8, 7, 10, 5, -1, 7, 1, 10, -1, 3, 7, 8, 9, 2, -1, 8, 6, 9, -1, 4, 1, 6, 8, -1, 1, 7, 3, 6, -1]"},
    {18, 10, 10, {2,6,2}, {2,6,2},
     "[10, 0, -1, 1, 4, 5, 2, -1, 8, 2, 5, 6, 3, -1, 2, 8, 9, 10, -1, 1, 7, 8, 3, -1, 7, 4, 9, 8, -1, 1, 2, 10, 7, -1, 10, 9, 4, 3, 6, -1, 4, 1, 3, -1, 6, 5, 7, 10, -1, 5, 4, 7, -1]"},
    {19, 10, 10, {3,4,3}, {3,4,3},
     "[10, 0, -1, 1, 4, 5, 2, -1, 2, 5, 6, 3, -1, 10, 2, 3, 8, 7, -1, 9, 5, 4, 8, -1, 2, 10, 9, 1, -1, 10, 7, 6, 5, 9, -1, 9, 8, 3, -1, 3, 1, 9, -1, 3, 6, 1, -1, 6, 7, 8, 4, 1, -1]"},
    {20, 10, 10, {3,4,3}, {3,4,3},
     "[10, 0, -1, 1, 4, 5, 2, -1, 2, 7, 10, 8, 6, -1, 6, 8, 4, 3, -1, 4, 1, 3, -1, 2, 6, 9, 1, -1, 9, 6, 5, -1, 2, 5, 3, 7, -1, 5, 6, 3, -1, 1, 9, 10, 7, 3, -1, 10, 9, 5, 4, 8, -1]"},
    {21, 10, 10, {3,5,1,1}, {3,5,1,1},
     "[10, 0, -1, 1, 4, 5, 2, -1, 10, 8, 3, 9, 5, 4, -1, 3, 1, 7, 9, -1, 3, 6, 1, -1, 6, 4, 1, -1, 1, 2, 8, 10, 7, -1, 10, 4, 6, 7, -1, 6, 3, 8, 2, -1, 7, 6, 9, -1, 6, 2, 5, 9, -1]"},
    {22, 10, 10, {4,2,4}, {4,2,4},
     "[10, 0, -1, 1, 4, 5, 2, -1, 9, 2, 3, 8, 7, -1, 5, 6, 2, -1, 6, 3, 2, -1, 2, 9, 10, 1, -1, 10, 9, 7, 6, 5, -1, 4, 8, 3, 10, 5, -1, 3, 1, 10, -1, 8, 4, 1, 6, 7, -1, 1, 3, 6, -1]"},
    {23, 10, 11, {2,9}, {1,6,3},
     "[10, 0, -1, 2, 5, 6, 3, -1, 7, 9, 1, -1, 9, 7, 6, 5, -1, 1, 4, 10, 7, -1, 10, 4, 5, 2, -1, 1, 9, 8, 3, -1, 9, 5, 4, 8, -1, 10, 2, 3, 8, -1, 8, 6, 7, 10, -1, 8, 4, 6, -1, 4, 1, 3, 6, -1]"},
    {24, 10, 11, {3,7,1}, {3,2,5},
     "[10, 0, -1, 9, 6, 1, 2, 10, -1, 2, 1, 8, 3, -1, 9, 7, 5, 6, -1, 6, 5, 4, 1, -1, 8, 1, 4, 7, -1, 5, 7, 2, -1, 2, 7, 4, 10, -1, 5, 2, 3, -1, 8, 7, 9, 3, -1, 3, 4, 5, -1, 10, 4, 3, 9, -1]"},
    {25, 10, 11, {3,7,1}, {3,3,3,1},
     "[10, 0, -1, 9, 5, 8, 1, 10, -1, 10, 1, 2, 3, -1, 5, 2, 7, 8, -1, 8, 7, 4, 1, -1, 1, 4, 2, -1, 7, 2, 9, -1, 9, 2, 4, -1, 10, 3, 7, 9, -1, 3, 2, 5, 6, -1, 3, 6, 4, 7, -1, 9, 4, 6, 5, -1]"},
    {26, 10, 11, {4,5,2}, {0,8,2},
     "[10, 0, -1, 10, 1, 7, 5, -1, 1, 4, 2, 8, -1, 4, 9, 5, 2, -1, 6, 7, 1, 8, 9, -1, 9, 4, 6, -1, 10, 3, 6, 4, -1, 4, 1, 10, -1, 3, 10, 5, 9, 8, -1, 8, 2, 3, -1, 7, 6, 3, 2, -1, 2, 5, 7, -1]"},
    {27, 10, 11, {4,5,2}, {1,6,3},
     "[10, 0, -1, 10, 3, 6, 4, 1, -1, 10, 1, 7, 5, -1, 1, 4, 2, 8, -1, 4, 9, 5, 2, -1, 7, 1, 8, -1, 8, 9, 6, 7, -1, 9, 4, 6, -1, 3, 10, 5, 9, 8, -1, 8, 2, 3, -1, 7, 6, 3, 2, -1, 2, 5, 7, -1]"},
    {28, 10, 11, {4,6,0,1}, {3,3,3,1},
     "[10, 0, -1, 7, 10, 9, 6, 1, 8, -1, 8, 1, 2, 3, -1, 9, 2, 5, 6, -1, 6, 5, 4, 1, -1, 1, 4, 2, -1, 5, 2, 7, -1, 7, 2, 4, 10, -1, 8, 3, 5, 7, -1, 3, 2, 9, -1, 3, 4, 5, -1, 10, 4, 3, 9, -1]"},
    {29, 10, 11, {5,3,3}, {1,6,3},
     "[10, 0, -1, 3, 6, 4, 1, -1, 8, 2, 5, 6, 3, -1, 1, 2, 8, 10, 7, -1, 10, 6, 5, 7, -1, 8, 3, 9, -1, 6, 10, 4, -1, 10, 8, 9, 4, -1, 3, 1, 7, -1, 7, 9, 3, -1, 7, 5, 9, -1, 5, 2, 1, 4, 9, -1]"},
    {30, 10, 11, {5,3,3}, {3,3,3,1},
     "[10, 0, -1, 2, 5, 6, 3, -1, 3, 1, 7, 10, -1, 6, 5, 7, 8, 9, -1, 7, 1, 8, -1, 4, 1, 6, 9, -1, 1, 3, 6, -1, 7, 5, 2, 4, 10, -1, 1, 4, 2, -1, 2, 8, 1, -1, 2, 3, 8, -1, 3, 10, 4, 9, 8, -1]"},
    {31, 10, 11, {5,3,3}, {4,0,6},
     "[10, 0, -1, 9, 5, 1, 8, -1, 9, 8, 2, -1, 2, 1, 5, 6, 4, -1, 8, 1, 3, -1, 7, 10, 2, 8, -1, 1, 2, 10, -1, 9, 10, 7, 6, 5, -1, 3, 9, 2, 4, -1, 3, 1, 10, -1, 4, 6, 7, 8, 3, -1, 3, 10, 9, -1]"},
    {32, 11, 9, {0,5,4}, {4,7},
     "[11, 0, -1, 1, 4, 5, 2, -1, 8, 2, 5, 6, 3, -1, 2, 8, 11, 9, 7, -1, 2, 7, 10, 1, -1, 10, 7, 6, 5, -1, 7, 9, 3, 6, -1, 9, 4, 1, 3, -1, 1, 10, 11, 8, 3, -1, 11, 10, 5, 4, 9, -1]"},
    {33, 11, 9, {1,3,5}, {4,7},
     "[11, 0, -1, 1, 4, 5, 2, -1, 8, 2, 5, 6, 3, -1, 2, 8, 11, 9, 7, -1, 2, 7, 10, 1, -1, 10, 7, 6, 5, -1, 7, 9, 4, 3, 6, -1, 4, 1, 3, -1, 4, 9, 11, 10, 5, -1, 11, 8, 3, 1, 10, -1]"},
    {34, 11, 9, {1,4,3,1}, {5,5,1},
     "[11, 0, -1, 1, 4, 5, 2, -1, 2, 5, 6, 3, -1, 10, 2, 3, 8, 9, 7, -1, 2, 10, 11, 1, -1, 11, 10, 7, 6, 5, -1, 4, 9, 8, 11, 5, -1, 8, 1, 11, -1, 4, 1, 6, 7, 9, -1, 1, 8, 3, 6, -1]"},
    {35, 11, 9, {1,4,3,1}, {5,5,1},
     "[11, 0, -1, 1, 4, 5, 2, -1, 2, 5, 6, 3, -1, 11, 2, 3, 10, 8, 7, -1, 3, 1, 9, 10, -1, 10, 9, 5, 4, 8, -1, 2, 11, 9, 1, -1, 11, 7, 6, 5, 9, -1, 8, 4, 1, 6, 7, -1, 1, 3, 6, -1]"},
    {36, 11, 9, {2,2,4,1}, {6,3,2},
     "[11, 0, -1, 1, 4, 5, 2, -1, 10, 8, 3, 9, 5, 4, -1, 3, 1, 11, 7, 9, -1, 3, 6, 1, -1, 6, 4, 1, -1, 1, 2, 8, 10, 11, -1, 11, 10, 4, 6, 7, -1, 7, 6, 2, 5, 9, -1, 6, 3, 8, 2, -1]"},
    {37, 11, 10, {0,8,2}, {4,5,2},
     "[11, 0, -1, 1, 4, 5, 2, -1, 2, 5, 6, 3, -1, 3, 1, 9, 10, -1, 10, 9, 5, 4, 8, -1, 2, 11, 9, 1, -1, 11, 7, 6, 5, 9, -1, 2, 3, 10, 8, -1, 8, 7, 11, 2, -1, 8, 4, 1, 7, -1, 1, 3, 6, 7, -1]"},
    {38, 11, 10, {1,6,3}, {2,9},
     "[11, 0, -1, 2, 5, 6, 3, -1, 1, 7, 11, 6, 5, -1, 8, 1, 5, 9, -1, 6, 4, 3, -1, 4, 1, 8, 3, -1, 1, 4, 10, 2, 7, -1, 10, 9, 5, 2, -1, 3, 8, 11, 7, 2, -1, 8, 9, 10, 11, -1, 10, 4, 6, 11, -1]"},
    {39, 11, 10, {1,6,3}, {4,5,2},
     "[11, 0, -1, 1, 4, 5, 2, -1, 8, 2, 5, 6, 3, -1, 10, 2, 8, 9, 7, -1, 2, 10, 11, 1, -1, 11, 10, 7, 6, 5, -1, 4, 9, 11, 5, -1, 11, 9, 8, 3, -1, 3, 1, 11, -1, 3, 6, 7, 1, -1, 7, 9, 4, 1, -1]"},
    {40, 11, 10, {1,6,3}, {5,3,3},
     "[11, 0, -1, 2, 5, 6, 3, -1, 1, 7, 8, 6, 5, -1, 11, 9, 1, 5, -1, 11, 5, 4, 10, -1, 5, 2, 4, -1, 2, 7, 1, 4, -1, 8, 10, 4, 3, 6, -1, 4, 1, 9, 3, -1, 8, 7, 2, 11, 10, -1, 2, 3, 9, 11, -1]"},
    {41, 11, 10, {3,2,5}, {3,7,1},
     "[11, 0, -1, 1, 4, 5, 2, -1, 1, 2, 8, 6, 7, -1, 2, 9, 11, 10, 8, -1, 4, 10, 11, 7, 5, -1, 8, 10, 4, 3, 6, -1, 4, 1, 3, -1, 6, 3, 9, 5, 7, -1, 9, 2, 5, -1, 3, 1, 11, 9, -1, 1, 7, 11, -1]"},
    {42, 11, 10, {3,3,3,1}, {3,7,1},
     "[11, 0, -1, 1, 4, 5, 2, -1, 9, 2, 5, 7, 6, 3, -1, 2, 9, 10, 8, -1, 4, 10, 11, 7, 5, -1, 1, 11, 9, 3, -1, 11, 10, 9, -1, 8, 10, 4, 3, 6, -1, 4, 1, 3, -1, 7, 11, 1, 8, 6, -1, 1, 2, 8, -1]"},
    {43, 11, 10, {3,3,3,1}, {4,6,0,1},
     "[11, 0, -1, 1, 4, 5, 2, -1, 9, 2, 5, 7, 6, 3, -1, 2, 9, 11, 10, 8, -1, 4, 10, 11, 7, 5, -1, 8, 10, 4, 3, 6, -1, 4, 1, 3, -1, 7, 1, 8, 6, -1, 1, 2, 8, -1, 3, 1, 11, 9, -1, 1, 7, 11, -1]"},
    {44, 11, 10, {3,3,3,1}, {5,3,3},
     "[11, 0, -1, 1, 4, 5, 2, -1, 9, 2, 5, 7, 6, 3, -1, 2, 9, 10, 8, -1, 10, 4, 8, -1, 8, 4, 3, 6, -1, 4, 1, 3, -1, 3, 1, 11, 10, 9, -1, 11, 7, 5, 4, 10, -1, 7, 11, 1, 8, 6, -1, 1, 2, 8, -1]"},
    {45, 11, 10, {4,0,6}, {5,3,3},
     "[11, 0, -1, 3, 6, 9, 4, 1, -1, 8, 2, 5, 6, 3, -1, 9, 11, 8, 10, 4, -1, 8, 3, 10, -1, 3, 1, 7, -1, 7, 10, 3, -1, 7, 5, 10, -1, 5, 2, 1, 4, 10, -1, 2, 8, 11, 7, 1, -1, 11, 9, 6, 5, 7, -1]"},
    {46, 11, 11, {0,11}, {0,11},
     "[11, 0, -1, 3, 6, 4, 1, -1, 1, 4, 5, 2, -1, 3, 1, 7, 9, -1, 9, 10, 8, 3, -1, 10, 9, 5, 4, -1, 7, 1, 2, 8, -1, 6, 3, 8, 2, -1, 6, 11, 10, 4, -1, 11, 7, 8, 10, -1, 7, 11, 5, 9, -1, 11, 6, 2, 5, -1]"},
    {47, 12, 8, {0,2,4,2}, {8,4},
     "[12, 0, -1, 3, 6, 4, 1, -1, 1, 4, 5, 2, -1, 12, 8, 9, 10, 5, 4, -1, 9, 3, 1, 11, 7, 10, -1, 6, 7, 11, 12, 4, -1, 12, 11, 1, 2, 8, -1, 8, 2, 6, 3, 9, -1, 2, 5, 10, 7, 6, -1]"},
    {48, 12, 9, {0,3,6}, {6,6},
     "[12, 0, -1, 3, 6, 4, 1, -1, 2, 5, 6, 3, -1, 8, 2, 3, 10, 9, -1, 3, 1, 7, 11, 10, -1, 6, 5, 9, 4, -1, 5, 7, 1, 8, 9, -1, 12, 2, 8, 1, 4, -1, 9, 10, 11, 12, 4, -1, 12, 11, 7, 5, 2, -1]"},
    {49, 12, 9, {2,0,6,1}, {6,6},
     "[12, 0, -1, 3, 6, 9, 4, 1, -1, 8, 2, 5, 6, 3, -1, 3, 1, 11, 7, 10, -1, 9, 12, 8, 10, 4, -1, 8, 3, 10, -1, 7, 5, 2, 4, 10, -1, 2, 1, 4, -1, 7, 11, 12, 9, 6, 5, -1, 12, 11, 1, 2, 8, -1]"},
    {50, 12, 9, {2,1,4,2}, {6,6},
     "[12, 0, -1, 1, 4, 5, 2, -1, 12, 1, 2, 8, 6, 7, -1, 2, 9, 11, 10, 8, -1, 4, 10, 11, 12, 7, 5, -1, 12, 11, 9, 3, 1, -1, 8, 10, 4, 3, 6, -1, 4, 1, 3, -1, 6, 3, 9, 5, 7, -1, 9, 2, 5, -1]"},
    {51, 12, 9, {2,1,4,2}, {7,4,1},
     "[12, 0, -1, 1, 4, 5, 2, -1, 9, 2, 5, 7, 6, 3, -1, 2, 9, 11, 10, 8, -1, 4, 10, 11, 12, 7, 5, -1, 12, 11, 9, 3, 1, -1, 8, 10, 4, 3, 6, -1, 4, 1, 3, -1, 7, 12, 1, 8, 6, -1, 1, 2, 8, -1]"},
    {52, 13, 8, {1,0,3,4}, {10,3},
     "[13, 0, -1, 3, 6, 9, 4, 1, -1, 1, 4, 11, 7, 5, 2, -1, 10, 8, 2, 5, 6, 3, -1, 13, 8, 10, 11, 4, 9, -1, 11, 10, 3, 12, 7, -1, 12, 3, 1, -1, 6, 5, 7, 12, 13, 9, -1, 13, 12, 1, 2, 8, -1]"},
    {53, 14, 7, {0,0,0,7}, {14,0},
     "[14, 0, -1, 3, 6, 10, 12, 4, 1, -1, 9, 7, 1, 4, 5, 2, -1, 11, 2, 5, 8, 6, 3, -1, 13, 7, 9, 10, 6, 8, -1, 9, 2, 11, 14, 12, 10, -1, 1, 7, 13, 14, 11, 3, -1, 14, 13, 8, 5, 4, 12, -1]"},
    };
    return data;
}

}  // namespace

const std::vector<Entry>& raw_entries() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> out;
        for (const auto& r : rows()) {
            // Rows 6 and 7 print the P and V columns in each other's place.
            bool swapped = r.number == 6 || r.number == 7;
            out.push_back({r.number, r.order, r.size, r.p, r.v, r.serial, swapped});
        }
        return out;
    }();
    return entries;
}

const std::vector<int>& dual_table() {
    static const std::vector<int> table = [] {
        std::vector<int> t(kEntryCount + 1, 0);
        const std::pair<int, int> pairs[] = {
            {1, 53}, {2, 47}, {3, 52}, {4, 32}, {5, 33}, {6, 34}, {7, 35}, {8, 36},
            {9, 48}, {10, 49}, {11, 50}, {12, 51}, {14, 15}, {19, 20}, {23, 38},
            {24, 41}, {25, 42}, {26, 37}, {27, 39}, {28, 43}, {29, 40}, {30, 44}, {31, 45},
        };
        for (auto [a, b] : pairs) {
            t[static_cast<std::size_t>(a)] = b;
            t[static_cast<std::size_t>(b)] = a;
        }
        for (int s : {13, 16, 17, 18, 21, 22, 46}) t[static_cast<std::size_t>(s)] = s;
        return t;
    }();
    return table;
}

const std::vector<int>& self_dual_numbers() {
    static const std::vector<int> s = {13, 16, 17, 18, 21, 22, 46};
    return s;
}

}  // namespace tpm::catalog
