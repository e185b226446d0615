#include "tsal/transformation.hpp"

#include <map>
#include <string>

namespace tsal
{

  namespace
  {
    struct KindInfo
    {
      TxKind kind;
      std::string_view head;
      std::vector<ArgSpec> args;
    };

    using S = ArgShape;

    const std::vector<KindInfo>& kinds()
    {
      static const std::vector<KindInfo> table = {
        {TxKind::AddType, "ADDTYPE", {{"TYPE", S::Name}}},
        {TxKind::AddTypeParent, "ADDTYPEPARENT", {{"CHILD", S::Name}, {"PARENT", S::Name}}},
        {TxKind::RemoveTypeParent, "REMOVETYPEPARENT", {{"CHILD", S::Name}, {"PARENT", S::Name}}},
        {TxKind::AddConstant, "ADDCONSTANT", {{"NAME", S::Name}, {"TYPE", S::Name}}},
        {TxKind::AddFunction, "ADDFUNCTION", {{"FUNCTION", S::Function}}},
        {TxKind::AddAxiom, "ADDAXIOM", {{"AXIOM", S::Axiom}}},
        {TxKind::RemoveType, "REMOVETYPE", {{"NAME", S::Name}}},
        {TxKind::RemoveConstant, "REMOVECONSTANT", {{"NAME", S::Name}}},
        {TxKind::RemoveFunction, "REMOVEFUNCTION", {{"NAME", S::Name}}},
        {TxKind::RemoveAxiom, "REMOVEAXIOM", {{"AXIOM", S::Axiom}}},
        {TxKind::AddAction, "ADDACTION",
         {{"ACTIONNAME", S::Name}, {"PERFORMER", S::Term}, {"PARAMETERS", S::SymbolList},
          {"PARAMETERTYPES", S::SymbolList}}},
        {TxKind::AddPrecondition, "ADDPRECONDITION", {{"ACTIONNAME", S::Name}, {"PRECONDITION", S::Condition}}},
        {TxKind::AddActionEffect, "ADDACTIONEFFECT", {{"ACTIONNAME", S::Name}, {"EFFECT", S::Effect}}},
        {TxKind::RemoveAction, "REMOVEACTION", {{"ACTIONNAME", S::Name}}},
        {TxKind::RemovePrecondition, "REMOVEPRECONDITION",
         {{"ACTIONNAME", S::Name}, {"PRECONDITION", S::Condition}}},
        {TxKind::RemoveActionEffect, "REMOVEACTIONEFFECT", {{"ACTIONNAME", S::Name}, {"EFFECT", S::Effect}}},
        {TxKind::AddEvent, "ADDEVENT",
         {{"EVENTNAME", S::Name}, {"QUALITIES", S::SymbolList}, {"QUALITYTYPES", S::SymbolList}}},
        {TxKind::ChangeFrequency, "CHANGEFREQUENCY", {{"EVENTNAME", S::Name}, {"FREQUENCY", S::Number}}},
        {TxKind::ChangeProbability, "CHANGEPROBABILITY", {{"EVENTNAME", S::Name}, {"PROBABILITY", S::Number}}},
        {TxKind::AddTrigger, "ADDTRIGGER", {{"EVENTNAME", S::Name}, {"TRIGGER", S::Condition}}},
        {TxKind::AddEventEffect, "ADDEVENTEFFECT", {{"EVENTNAME", S::Name}, {"EFFECT", S::Effect}}},
        {TxKind::RemoveEvent, "REMOVEEVENT", {{"NAME", S::Name}}},
        {TxKind::RemoveTrigger, "REMOVETRIGGER", {{"EVENTNAME", S::Name}, {"TRIGGER", S::Condition}}},
        {TxKind::RemoveEventEffect, "REMOVEEVENTEFFECT", {{"EVENTNAME", S::Name}, {"EFFECT", S::Effect}}},
        {TxKind::AddProcess, "ADDPROCESS",
         {{"PROCESSNAME", S::Name}, {"QUALITIES", S::SymbolList}, {"QUALITYTYPES", S::SymbolList}}},
        {TxKind::AddProcessCondition, "ADDPROCESSCONDITION",
         {{"PROCESSNAME", S::Name}, {"CONDITION", S::Condition}}},
        {TxKind::AddProcessChange, "ADDPROCESSCHANGE", {{"PROCESSNAME", S::Name}, {"CHANGE", S::Change}}},
        {TxKind::RemoveProcess, "REMOVEPROCESS", {{"NAME", S::Name}}},
        {TxKind::RemoveProcessCondition, "REMOVEPROCESSCONDITION",
         {{"PROCESSNAME", S::Name}, {"CONDITION", S::Condition}}},
        {TxKind::RemoveProcessChange, "REMOVEPROCESSCHANGE", {{"PROCESSNAME", S::Name}, {"CHANGE", S::Change}}},
        {TxKind::AddFluentValue, "ADDFLUENTVALUE",
         {{"FUNCTIONNAME", S::Name}, {"FLUENTARGS", S::ValueList}, {"VALUE", S::Value}}},
        {TxKind::AddDefaultValue, "ADDDEFAULTVALUE", {{"FUNCTIONNAME", S::Name}, {"VALUE", S::Value}}},
        {TxKind::AddObjectGenerator, "ADDOBJECTGENERATOR",
         {{"NAME", S::Name}, {"TYPE", S::Name}, {"DRAWFUNCTION", S::Generator}}},
        {TxKind::AddValueGenerator, "ADDVALUEGENERATOR", {{"NAME", S::Name}, {"DRAWFUNCTION", S::Generator}}},
        {TxKind::AddFluentGenerator, "ADDFLUENTGENERATOR", {{"NAME", S::Name}, {"DRAWFUNCTION", S::Generator}}},
        {TxKind::ReplacePerformanceCalculation, "REPLACEPERFORMANCECALCULATION",
         {{"PERFORMANCE", S::Calculation}}},
      };
      return table;
    }

    // Spellings used in prose or with evident typos.
    const std::map<std::string, TxKind, std::less<>>& aliases()
    {
      static const std::map<std::string, TxKind, std::less<>> m = {
        {"ADDDEFAULT", TxKind::AddDefaultValue},
        {"CHANGEEVENTFREQUENCY", TxKind::ChangeFrequency},
        {"REMOVEPROCESSCONDITIONS", TxKind::RemoveProcessCondition},
        {"REMOVE_TRIGGER", TxKind::RemoveTrigger},
        {"ADDPERFORMANCECALCULATION", TxKind::ReplacePerformanceCalculation},
        {"ADDBTYPE", TxKind::AddType},
        {"ADDBTYPEPARENT", TxKind::AddTypeParent},
        {"REMOVEBTYPEPARENT", TxKind::RemoveTypeParent},
      };
      return m;
    }

    const KindInfo& info(TxKind k) { return kinds()[static_cast<std::size_t>(k)]; }
  }

  std::string_view head_name(TxKind k) { return info(k).head; }

  std::optional<TxKind> kind_from_head(std::string_view head)
  {
    for (const auto& ki : kinds())
      if (ki.head == head)
        return ki.kind;
    if (auto it = aliases().find(head); it != aliases().end())
      return it->second;
    return std::nullopt;
  }

  bool is_t_transformation(TxKind k) { return k >= TxKind::AddFluentValue; }

  const std::vector<ArgSpec>& arg_specs(TxKind k) { return info(k).args; }

  const TxArg* Transformation::arg(std::string_view name) const
  {
    for (const auto& [n, v] : args)
      if (n.str() == name)
        return &v;
    return nullptr;
  }

}  // namespace tsal
