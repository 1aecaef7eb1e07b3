/* QuickSort with the partition loop written as a pre-tested while loop. */
public class QuickSortWhile {

    // Sorts array[left..right] in ascending order.
    public static void sort(int[] array, int left, int right) {
        int i = left;
        int j = right;
        int middle = array[(left + right) / 2];
        while (i <= j) {
            while (array[i] < middle)
                i++;
            while (array[j] > middle)
                j--;
            if (i <= j) {
                // swap the out-of-place pair
                int temp = array[i];
                array[i] = array[j];
                array[j] = temp;
                i++;
                j--;
            }
        }
        if (left < j)
            sort(array, left, j);
        if (i < right)
            sort(array, i, right);
    }
}
