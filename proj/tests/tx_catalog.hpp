#pragma once

#include <string>
#include <vector>

#include "tsal/transformation.hpp"

namespace tsal::test
{

  struct TxSample
  {
    TxKind kind;
    std::string text;  // changes the reference environment when applied
  };

  // One sample per head, in declaration order.
  inline const std::vector<TxSample>& tx_catalog()
  {
    static const std::vector<TxSample> c = {
      {TxKind::AddType, "(ADDTYPE :TYPE TRUCK)"},
      {TxKind::AddTypeParent, "(ADDTYPEPARENT :CHILD BLOCK :PARENT CART)"},
      {TxKind::RemoveTypeParent, "(REMOVETYPEPARENT :CHILD SPEED :PARENT REAL)"},
      {TxKind::AddConstant, "(ADDCONSTANT :NAME AGENT2 :TYPE AGENT)"},
      {TxKind::AddFunction, "(ADDFUNCTION :FUNCTION (MASS ?B - BLOCK) - REAL)"},
      {TxKind::AddAxiom, "(ADDAXIOM :AXIOM (:- (WINS ?AG - AGENT) (UPRIGHT CART1)))"},
      {TxKind::RemoveType, "(REMOVETYPE :NAME ANGLE)"},
      {TxKind::RemoveConstant, "(REMOVECONSTANT :NAME AGENT1)"},
      {TxKind::RemoveFunction, "(REMOVEFUNCTION :NAME IS-BLOCK)"},
      {TxKind::RemoveAxiom,
       "(REMOVEAXIOM :AXIOM (:- (UPRIGHT ?C - CART) (AND (< (POLE-ANGLE ?C) 0.1) (> (POLE-ANGLE ?C) -0.1))))"},
      {TxKind::AddAction, "(ADDACTION :ACTIONNAME BRAKE :PERFORMER ?AG :PARAMETERS (?C) :PARAMETERTYPES (CART))"},
      {TxKind::AddPrecondition, "(ADDPRECONDITION :ACTIONNAME PUSH :PRECONDITION (UPRIGHT ?C))"},
      {TxKind::AddActionEffect, "(ADDACTIONEFFECT :ACTIONNAME PUSH :EFFECT (SET (WINS ?AG) FALSE))"},
      {TxKind::RemoveAction, "(REMOVEACTION :ACTIONNAME PUSH)"},
      {TxKind::RemovePrecondition, "(REMOVEPRECONDITION :ACTIONNAME PUSH :PRECONDITION (CONTROLS ?AG ?C))"},
      {TxKind::RemoveActionEffect,
       "(REMOVEACTIONEFFECT :ACTIONNAME PUSH :EFFECT (INCREASE (CART-VELOCITY ?C) ?FORCE))"},
      {TxKind::AddEvent, "(ADDEVENT :EVENTNAME TOPPLES :QUALITIES (?C) :QUALITYTYPES (CART))"},
      {TxKind::ChangeFrequency, "(CHANGEFREQUENCY :EVENTNAME FINISHES :FREQUENCY 2)"},
      {TxKind::ChangeProbability, "(CHANGEPROBABILITY :EVENTNAME FINISHES :PROBABILITY 0.5)"},
      {TxKind::AddTrigger, "(ADDTRIGGER :EVENTNAME FINISHES :TRIGGER (> (POLE-ANGLE ?C) -1))"},
      {TxKind::AddEventEffect, "(ADDEVENTEFFECT :EVENTNAME FINISHES :EFFECT (SET (CART-VELOCITY ?C) 0))"},
      {TxKind::RemoveEvent, "(REMOVEEVENT :NAME FINISHES)"},
      {TxKind::RemoveTrigger, "(REMOVETRIGGER :EVENTNAME FINISHES :TRIGGER (UPRIGHT ?C))"},
      {TxKind::RemoveEventEffect, "(REMOVEEVENTEFFECT :EVENTNAME FINISHES :EFFECT (SET (WINS ?AG) TRUE))"},
      {TxKind::AddProcess, "(ADDPROCESS :PROCESSNAME DRIFT :QUALITIES (?B) :QUALITYTYPES (BLOCK))"},
      {TxKind::AddProcessCondition,
       "(ADDPROCESSCONDITION :PROCESSNAME POLE-ANGLE-CHANGES :CONDITION (UPRIGHT ?C))"},
      {TxKind::AddProcessChange, "(ADDPROCESSCHANGE :PROCESSNAME POLE-ANGLE-CHANGES "
                                 ":CHANGE (INCREASE (CART-POSITION ?C) (* DT (CART-VELOCITY ?C))))"},
      {TxKind::RemoveProcess, "(REMOVEPROCESS :NAME POLE-ANGLE-CHANGES)"},
      {TxKind::RemoveProcessCondition, "(REMOVEPROCESSCONDITION :PROCESSNAME POLE-ANGLE-CHANGES "
                                       ":CONDITION (FORALL ?AG TRUE (NOT (WINS ?AG))))"},
      {TxKind::RemoveProcessChange, "(REMOVEPROCESSCHANGE :PROCESSNAME POLE-ANGLE-CHANGES "
                                    ":CHANGE (INCREASE (POLE-ANGLE ?C) (* DT (ANGULAR-MOTION ?C))))"},
      {TxKind::AddFluentValue, "(ADDFLUENTVALUE :FUNCTIONNAME CONTROLS :FLUENTARGS (AGENT1 CART1) :VALUE FALSE)"},
      {TxKind::AddDefaultValue, "(ADDDEFAULTVALUE :FUNCTIONNAME POLE-ANGLE :VALUE 0.2)"},
      {TxKind::AddObjectGenerator, "(ADDOBJECTGENERATOR :NAME BLOCKS :TYPE BLOCK :DRAWFUNCTION (OBJECTLIST 5 \"block\"))"},
      {TxKind::AddValueGenerator, "(ADDVALUEGENERATOR :NAME NUDGE :DRAWFUNCTION (GAUSSIANDISTRIBUTION 0 1))"},
      {TxKind::AddFluentGenerator,
       "(ADDFLUENTGENERATOR :NAME POLE-ANGLE :DRAWFUNCTION (ALLPERMUTATIONS (CARTS) (UNIFORMDISTRIBUTION -0.1 0.1)))"},
      {TxKind::ReplacePerformanceCalculation, "(REPLACEPERFORMANCECALCULATION :PERFORMANCE (AGENT-FORCE ?AG))"},
    };
    return c;
  }

}  // namespace tsal::test
