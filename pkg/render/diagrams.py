"""Strand diagrams of partial signed permutations (text, DOT and plotly)"""
import plotly.graph_objects as go

from monoids.partial_perm import SignedPartialPerm


def _sign_label(sign):
    return "+" if sign > 0 else "-"


def render_text(a: SignedPartialPerm) -> str:
    """
    One line per strand, top point to bottom point.

    Deleted strands are drawn dashed and end in ``x``; bottom points that no
    strand reaches are listed the same way.
    """
    lines = []
    for j, entry in enumerate(a.image, start=1):
        if entry is None:
            lines.append(f"{j} - - - x")
        else:
            target, sign = entry
            lines.append(f"{j} -({_sign_label(sign)})-> {target}")
    reached = set(a.codomain())
    for t in range(1, a.n + 1):
        if t not in reached:
            lines.append(f"x - - - {t}")
    return "\n".join(lines)


def render_dot(a: SignedPartialPerm) -> str:
    """Graphviz digraph: s<j> are top points, t<j> bottom points"""
    lines = ["digraph partial_perm {", "  rankdir=TB;", "  node [shape=circle];"]
    for j in range(1, a.n + 1):
        lines.append(f'  s{j} [label="{j}"];')
    for j in range(1, a.n + 1):
        lines.append(f'  t{j} [label="{j}\'"];')
    for j, entry in enumerate(a.image, start=1):
        if entry is None:
            lines.append(f"  d{j} [shape=point];")
            lines.append(f"  s{j} -> d{j} [style=dashed];")
        else:
            target, sign = entry
            lines.append(f'  s{j} -> t{target} [label="{_sign_label(sign)}"];')
    lines.append("}")
    return "\n".join(lines)


def strand_figure(a: SignedPartialPerm, title=None):
    """Plotly figure: top points at y=1, bottom points at y=0"""
    fig = go.Figure()

    # Endpoints
    points = list(range(1, a.n + 1))
    fig.add_trace(
        go.Scatter(
            x=points + points,
            y=[1] * a.n + [0] * a.n,
            mode='markers+text',
            text=[str(j) for j in points] + [f"{j}'" for j in points],
            textposition=['top center'] * a.n + ['bottom center'] * a.n,
            marker=dict(size=10, color='black'),
            showlegend=False
        )
    )

    for j, entry in enumerate(a.image, start=1):
        if entry is None:
            fig.add_trace(
                go.Scatter(
                    x=[j, j],
                    y=[1, 0.5],
                    mode='lines',
                    line=dict(color='gray', width=2, dash='dash'),
                    name=f'{j} deleted'
                )
            )
            continue
        target, sign = entry
        fig.add_trace(
            go.Scatter(
                x=[j, target],
                y=[1, 0],
                mode='lines',
                line=dict(color='blue' if sign > 0 else 'red', width=2),
                name=f'{j} -> {_sign_label(sign)}{target}'
            )
        )

    fig.update_layout(
        title=title or a.to_text(),
        xaxis=dict(visible=False),
        yaxis=dict(visible=False, range=[-0.3, 1.3]),
        height=400
    )
    return fig
