"""
Report renderers
Every command builds one payload dict; these functions turn it into the
text, CSV or JSON artifact. Big values are already decimal strings.
"""
import csv
import io
import json

TEXT_FAILURE_LIMIT = 10


def to_json(payload):
    """Stable field order (insertion order), two-space indent"""
    return json.dumps(payload, indent=2, ensure_ascii=False)


def _csv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip('\n')


def _compact(value):
    return json.dumps(value, separators=(',', ':'), ensure_ascii=False)


def render_payload(payload, output_format):
    renderer = {
        'text': render_text,
        'csv': render_csv,
        'json': to_json,
    }[output_format]
    return renderer(payload)


def render_text(payload):
    if payload['command'] == 'table':
        return _table_text(payload)
    lines = [f"{payload['command']}: {'PASSED' if payload['passed'] else 'FAILED'}"]
    lines.append(f"config: {_compact(payload['config'])}")
    for report in payload.get('suites', []):
        lines.extend(_suite_text(report))
    if payload['command'] == 'conjecture':
        lines.extend(_conjecture_text(payload))
    for entry in payload.get('experimental', []):
        verdict = 'matches' if entry['matches'] else 'differs'
        lines.append(f"  [experimental] compact first-kind form, {entry['convention']}, "
                     f"n={entry['n']} k={entry['k']}: {entry['value']} vs {entry['expected']} ({verdict})")
    return '\n'.join(lines)


def _suite_text(report):
    status = 'ok' if not report['failures'] and report['passes'] == report['instances'] else 'FAILED'
    line = f"  {report['suite']:<22} {report['passes']}/{report['instances']} passed  {status}"
    if report['wall_time_ms'] is not None:
        line += f"  {report['wall_time_ms']} ms"
    lines = [line]
    for failure in report['failures'][:TEXT_FAILURE_LIMIT]:
        lines.append(f"    FAIL {_compact(failure['params'])} -> {_compact(failure['witness'])}")
    hidden = len(report['failures']) - TEXT_FAILURE_LIMIT
    if hidden > 0:
        lines.append(f"    ... {hidden} more failures")
    return lines


def _conjecture_text(payload):
    lines = []
    for result in payload['claims']:
        lines.append(f"  claim {result['claim']}: {result['status']} "
                     f"({result['checks']} checks, {result['violations']} violations)")
        if result['witness'] is not None:
            witness = result['witness']
            lines.append(f"    first counterexample {_compact(witness['params'])} "
                         f"{witness['property']}: {_compact(witness['values'])}")
        if result['zero_denominators']:
            lines.append(f"    {len(result['zero_denominators'])} checks skipped on a zero denominator")
    guard = payload.get('claim3_level1')
    if guard is not None:
        lines.append(f"  claim 3 at level 1 (asserted): {guard['status']}")
    return lines


def _table_text(payload):
    lines = [f"Stirling numbers of kind {payload['kind']}, 0 <= k <= n <= {payload['max_n']}"]
    row, current = [], 0
    for cell in payload['cells']:
        if cell['n'] != current:
            lines.append(f"{current}: {' '.join(row)}")
            row, current = [], cell['n']
        row.append(cell['value'])
    lines.append(f"{current}: {' '.join(row)}")
    return '\n'.join(lines)


def render_csv(payload):
    if payload['command'] == 'table':
        return _csv(('n', 'k', 'value'), ((cell['n'], cell['k'], cell['value']) for cell in payload['cells']))
    if payload['command'] == 'conjecture':
        rows = [
            (result['claim'], result['status'], result['checks'], result['violations'],
             _compact(result['witness']['params']) if result['witness'] else '')
            for result in payload['claims']
        ]
        return _csv(('claim', 'status', 'checks', 'violations', 'witness'), rows)
    rows = [
        (report['suite'], report['instances'], report['passes'], len(report['failures']),
         '' if report['wall_time_ms'] is None else report['wall_time_ms'])
        for report in payload['suites']
    ]
    return _csv(('suite', 'instances', 'passes', 'failures', 'wall_time_ms'), rows)
