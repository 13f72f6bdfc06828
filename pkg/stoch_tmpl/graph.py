from langgraph.graph import StateGraph, END
from .state import AdaptState
from .adapt import adaptation_agent


def define_graph():
    workflow = StateGraph(AdaptState)

    # 1. Nodes
    workflow.add_node("combine", adaptation_agent.combine)
    workflow.add_node("extract", adaptation_agent.extract)
    workflow.add_node("check", adaptation_agent.check)
    workflow.add_node("fresh_synthesis", adaptation_agent.fresh_synthesis)
    workflow.add_node("summarize", adaptation_agent.summarize)

    # 2. Edges
    workflow.set_entry_point("combine")

    # A verdict reached early skips straight to the report
    def route_after(next_node: str):
        def route(state: AdaptState):
            return "summarize" if state.get("verdict") else next_node
        return route

    workflow.add_conditional_edges("combine", route_after("extract"), ["extract", "summarize"])
    workflow.add_conditional_edges("extract", route_after("check"), ["check", "summarize"])
    workflow.add_edge("check", "fresh_synthesis")
    workflow.add_edge("fresh_synthesis", "summarize")
    workflow.add_edge("summarize", END)

    return workflow.compile()


adapt_app = define_graph()
