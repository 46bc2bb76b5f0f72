import json
import logging
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from typing import NamedTuple

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from recognition import formats
from recognition.core.exceptions import ECPermError
from recognition.core.modular import decompose
from recognition.core.oracle import PROFILES, brute_force_recognize, random_instances
from recognition.core.permutations import generate_colored, verify
from recognition.core.recognizer import recognize, restrict
from recognition.serializers import (
    ClassificationSerializer,
    ColoredGraphSerializer,
    MDTreeSerializer,
    RestrictionSerializer,
    outcome_payload,
)
from recognition.utils.classification import classification

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
NEGATIVE = 1


class Command(BaseCommand):
    help = 'Recognize complete edge-colored permutation graphs and inspect their structure.'

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='subcommand', required=True)

        sub = subparsers.add_parser('recognize', help='certificate or obstruction for a graph')
        sub.add_argument('file')
        sub.add_argument('--quotient-labels', dest='quotient_labels')
        sub.add_argument('--jobs', type=int, default=None)
        sub.add_argument('--assert', dest='assert_member', action='store_true')

        sub = subparsers.add_parser('oracle', help='brute-force recognition of a small graph')
        sub.add_argument('file')
        sub.add_argument('--jobs', type=int, default=None)
        sub.add_argument('--assert', dest='assert_member', action='store_true')

        sub = subparsers.add_parser('verify', help='check a certificate against a graph')
        sub.add_argument('file')
        sub.add_argument('--certificate', required=True)
        sub.add_argument('--assert', dest='assert_member', action='store_true')

        sub = subparsers.add_parser('generate', help='graph of a labeling and permutation tuple')
        sub.add_argument('--labeling', default='id')
        sub.add_argument('--perm', action='append', required=True, dest='perms')
        sub.add_argument('--output')

        sub = subparsers.add_parser('mdtree', help='modular decomposition tree')
        sub.add_argument('file')
        sub.add_argument('--dot', action='store_true')

        sub = subparsers.add_parser('restrict', help='certificate of an induced subgraph')
        sub.add_argument('file')
        sub.add_argument('--certificate', required=True)
        sub.add_argument('--vertices', required=True)

        sub = subparsers.add_parser('classify', help='graph class flags')
        sub.add_argument('file')
        sub.add_argument('--assert', dest='assert_member', action='store_true')

        sub = subparsers.add_parser('random', help='seeded random graphs')
        sub.add_argument('--n', type=int, required=True)
        sub.add_argument('--k', type=int, required=True)
        sub.add_argument('--profile', choices=PROFILES, default='uniform')
        sub.add_argument('--count', type=int, default=1)
        sub.add_argument('--seed', type=int, default=None)

    def handle(self, *args, **options):
        handler = getattr(self, f"handle_{options['subcommand']}")
        try:
            handler(options)
        except CommandError:
            raise
        except (ECPermError, OSError) as e:
            logger.error(f"{options['subcommand']} failed: {str(e)}")
            raise CommandError(str(e), returncode=USAGE_ERROR)

    def emit(self, payload):
        self.stdout.write(json.dumps(payload))

    def jobs(self, options):
        jobs = options.get('jobs')
        if jobs is None:
            jobs = settings.ECPERM_JOBS
        if jobs < 1:
            raise CommandError(f"--jobs must be positive, got {jobs}", returncode=USAGE_ERROR)
        return jobs

    def check_assert(self, options, positive, what):
        if options.get('assert_member') and not positive:
            raise CommandError(f"{options['file']}: {what}", returncode=NEGATIVE)

    def handle_recognize(self, options):
        graph = formats.load_graph(options['file'])
        pins = formats.load_quotient_labels(options['quotient_labels']) if options['quotient_labels'] else None
        outcome = recognize(
            graph,
            quotient_labels=pins,
            jobs=self.jobs(options),
            check_orders=settings.DEBUG,
            order_check_max_n=settings.ECPERM_ORDER_CHECK_MAX_N,
        )
        payload = outcome_payload(graph, outcome)
        self.emit(payload)
        self.check_assert(options, payload['member'], 'not a complete edge-colored permutation graph')

    def handle_oracle(self, options):
        graph = formats.load_graph(options['file'])
        certificate = brute_force_recognize(graph, max_n=settings.ECPERM_ORACLE_MAX_N, jobs=self.jobs(options))
        if certificate is None:
            self.emit({'member': False})
        else:
            self.emit(outcome_payload(graph, certificate))
        self.check_assert(options, certificate is not None, 'no labeling certifies the graph')

    def handle_verify(self, options):
        graph = formats.load_graph(options['file'])
        certificate = formats.load_certificate(options['certificate'])
        valid = verify(graph, certificate.labeling, certificate.perms)
        self.emit({'valid': valid})
        self.check_assert(options, valid, 'certificate does not verify')

    def handle_generate(self, options):
        perms = [formats.parse_permutation(text) for text in options['perms']]
        labeling = formats.parse_labeling(options['labeling'], len(perms[0]))
        graph = generate_colored(labeling, perms)
        if options['output']:
            formats.save_graph(graph, options['output'])
            self.emit({'n': graph.n, 'k': graph.k, 'output': options['output']})
        else:
            self.emit(ColoredGraphSerializer(graph).data)

    def handle_mdtree(self, options):
        tree = decompose(formats.load_graph(options['file']))
        if options['dot']:
            self.stdout.write(tree.to_dot(), ending='')
        else:
            self.emit(MDTreeSerializer(tree).data)

    def handle_restrict(self, options):
        graph = formats.load_graph(options['file'])
        certificate = formats.load_certificate(options['certificate'])
        try:
            vertices = [int(v) for v in options['vertices'].split(',') if v.strip()]
        except ValueError:
            raise CommandError(f"--vertices expects comma separated ids, got {options['vertices']!r}", returncode=USAGE_ERROR)
        if not verify(graph, certificate.labeling, certificate.perms):
            raise CommandError(f"{options['certificate']}: certificate does not verify for {options['file']}", returncode=USAGE_ERROR)
        self.emit(RestrictionSerializer(restrict(graph, certificate, vertices)).data)

    def handle_classify(self, options):
        flags = classification(formats.load_graph(options['file']))
        self.emit(ClassificationSerializer(flags).data)
        self.check_assert(options, flags['colored_permutation'], 'not a complete edge-colored permutation graph')

    def handle_random(self, options):
        seed = options['seed']
        if seed is None:
            seed = settings.ECPERM_SEED
        if options['n'] < 1 or options['k'] < 1 or options['count'] < 0:
            raise CommandError("--n and --k must be positive and --count non-negative", returncode=USAGE_ERROR)
        stream = random_instances(seed, options['n'], options['k'], options['profile'])
        graphs = [ColoredGraphSerializer(next(stream)).data for _ in range(options['count'])]
        self.emit(graphs)


class CommandResult(NamedTuple):
    exit_code: int
    stdout: str
    stderr: str


def run(argv) -> CommandResult:
    """Run ``ecperm <argv>`` in-process the way the launcher does, capturing both streams."""
    out, err = StringIO(), StringIO()
    exit_code = 0
    with redirect_stdout(out), redirect_stderr(err):
        try:
            Command().run_from_argv(['ecperm', 'ecperm', *argv])
        except SystemExit as e:
            exit_code = e.code if isinstance(e.code, int) else int(e.code is not None)
    return CommandResult(exit_code, out.getvalue(), err.getvalue())
