#pragma once

#include "superplactic/errors.hpp"
#include "superplactic/evacuation.hpp"
#include "superplactic/growth.hpp"
#include "superplactic/insertion.hpp"
#include "superplactic/io.hpp"
#include "superplactic/lr.hpp"
#include "superplactic/plactic.hpp"
#include "superplactic/shapes.hpp"
#include "superplactic/signed_alphabet.hpp"
#include "superplactic/tableau.hpp"
#include "superplactic/taquin.hpp"
