package demo.search;

import java.util.Arrays;

/**
 * Searching helpers: linear and binary search plus a small classifier.
 */
public class Search {

    private static final int NOT_FOUND = -1;

    public static int linear(int[] values, int key) {
        for (int i = 0; i < values.length; i++) {
            if (values[i] == key) {
                return i;
            }
        }
        return NOT_FOUND;
    }

    public static int binary(int[] sorted, int key) {
        int low = 0, high = sorted.length - 1;
        while (low <= high) {
            int mid = (low + high) >>> 1; /* unsigned shift avoids overflow */
            if (sorted[mid] < key) {
                low = mid + 1;
            } else if (sorted[mid] > key) {
                high = mid - 1;
            } else {
                return mid;
            }
        }
        return NOT_FOUND;
    }

    static String classify(int x) {
        if (x < 0 && x > -10) {
            return "small negative";
        } else if (x == 0 || x == 42) {
            return "special";
        }
        return x > 0 ? "positive" : "negative";
    }

    public static int total(int[] values) {
        int sum = 0;
        for (int v : values) {
            sum += v;
        }
        return sum;
    }

    public static void main(String[] args) {
        int[] data = {5, 1, 4};
        Arrays.sort(data);
        System.out.println(binary(data, 4) + " " + linear(data, 1) + " " + total(data));
    }
}
