"""JSON and DOT renderings of monoid tables."""

# Exceptions
from api.utils.exceptions import InvalidInput

# Utils
from api.utils.renderers import render_json


DOT_HEADER = '''    rankdir = LR;
    node [shape = box, fontname = "monospace"];'''


def _quote(text):
    return '"' + str(text).replace('\\', '\\\\').replace('"', '\\"').replace('\n', '\\n') + '"'


def default_label(element):
    key = getattr(element, 'key', None)
    if callable(key):
        return key()
    return str(element)


def table_to_dict(table, label=default_label, generator_names=None, include_product=False):
    names = generator_names or ['g{}'.format(g + 1) for g in range(len(table.generators))]
    data = {
        'size': len(table),
        'generators': [{'name': name, 'element': g} for name, g in zip(names, table.generators)],
        'elements': [
            {'index': k, 'label': label(element), 'word': [names[g] for g in table.words[k]]}
            for k, element in enumerate(table.elements)
        ],
        'right_cayley': [list(edges) for edges in table.right],
    }
    if include_product:
        data['product'] = table.product_table()
    return data


def table_to_json(table, **kwargs):
    return render_json(table_to_dict(table, **kwargs))


def table_to_dot(table, label=default_label, generator_names=None, name='monoid'):
    """Right Cayley graph with generator-labelled edges, loops included."""
    names = generator_names or ['g{}'.format(g + 1) for g in range(len(table.generators))]
    lines = ['digraph {} {{'.format(_quote(name)), DOT_HEADER]
    for k, element in enumerate(table.elements):
        lines.append('    n{} [label={}];'.format(k, _quote(label(element))))
    for k, edges in enumerate(table.right):
        for g, target in enumerate(edges):
            lines.append('    n{} -> n{} [label={}];'.format(k, target, _quote(names[g])))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def export_cayley(table, fmt='dot', **kwargs):
    """The labelled right Cayley graph of ``table`` as DOT or JSON text."""
    if fmt == 'dot':
        return table_to_dot(table, **kwargs)
    if fmt == 'json':
        kwargs.pop('name', None)
        return table_to_json(table, **kwargs)
    raise InvalidInput('unknown export format {!r}'.format(fmt))
